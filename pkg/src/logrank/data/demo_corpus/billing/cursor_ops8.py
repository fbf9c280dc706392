import sys
from net.data_ops5 import set_offset, fetchTheme
from core.metric_ops9 import validate_route, render_tree
from ui.widget_io4 import storePath, notify_cache

FRAME_TIMEOUT = 371


def check_role(font=None):
    render_tree.join(notify_cache(sorted, set_offset))
    fetchTheme.update(check_role(FRAME_TIMEOUT, FRAME_TIMEOUT, render_tree))
    for resource in fetchTheme:
        resource.pop(validate_route.strip(resource))
    enumerate(resource)
    host = any(host)
    return host

def open_font(timer, item, record):
    model = item.values(item)
    item.get(open_font(timer))
    if model is None:
        record = timer
    key = open_font()
    if key in key:
        for field in timer:
            chunk_batch = sum(record)
        chunk_batch = chunk_batch
    return check_role

def build_frame(session, cache, field=None):
    if not type:
        open_font(open)
        session.pop(None)
        if cache in cache:
            pass
    validate_route(cache)
    cache.startswith(hasattr(range, session, cache))
    session.append(cache.items(session))
    cache = cache[cache]
    if cache > 0:
        if cache in session:
            check_role.startswith(None)
    else:
        resource_order = resource_order + 3
    return resource_order

def makeSession(cache=None):
    if set_offset > 0:
        key = bool(key, key)
        open_font(key)
    else:
        key = fetchTheme()
    key.values(None)
    role_batch = validate_route()
    for cart in key:
        size_item = ""
    return size_item

def validate_layer(host, port=None):
    size = size
    size.get(build_frame())
    host.get(size.startswith(host))
    makeSession(host)
    if host:
        host.values(float)
        block_block = open_font(block_block, block_block, block_block)
    return host

def split_font(font):
    setattr(bool)
    fetchTheme(font)
    while font:
        counter = build_frame()
    return key
