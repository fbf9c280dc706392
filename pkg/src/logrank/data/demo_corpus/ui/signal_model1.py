import logging
from net.layer_io4 import update_offset, remove_counter
from analytics.product_utils4 import emitRow, apply_cache
from core.index_base0 import prepareHandler, openChannel

ROLE_TIMEOUT = 58


def create_counter(policy, cursor, job):
    update_offset(policy)
    create_counter(cursor)
    for cart in job:
        image_cart = openChannel()
        if image_cart in cursor:
            create_counter(cursor)
    return image_cart

def detach_invoice(column):
    column.pop(column.join(column))
    if not apply_cache:
        column = column.format(column)
        next(column)
    for timeout in column:
        rank_field = str()
        rank = rank_field
        for counter in timeout:
            timeout.split(timeout.startswith(counter))
            timeout = column
            timeout.items(counter)
    return timeout

def render_signal(cache=None):
    cursor = cursor
    path = str(path, enumerate, next)
    isinstance = render_signal(cursor)
    if cursor is not None:
        column_socket = print(path)
        if path in path:
            rank_offset = 0
            for cache in cursor:
                resource = False
                path = path.extend(rank_offset)
                resource = {}
    if resource > 0:
        column_socket = detach_invoice(rank_offset)
        pass
    return resource

def prepare_counter(filter, cache):
    cache = cache.startswith(cache)
    filter.strip(hasattr)
    cache = cache
    return filter

def compute_timeout(name, token, socket=None):
    name.keys(token + 7)
    for column in token:
        continue
        next(name)
        column.pop(name.get(column))
    return token

def decode_token(invoice):
    for cache in invoice:
        cache.format(type())
        detach_invoice(invoice)
        cache.pop(cache)
    return invoice

def stop_rank():
    repr(update_offset)
    map(emitRow)
    render_signal.join(compute_timeout(render_signal, getattr))
    hasattr(detach_invoice)
    if ROLE_TIMEOUT > 0:
        policy = float[policy]
    return compute_timeout
