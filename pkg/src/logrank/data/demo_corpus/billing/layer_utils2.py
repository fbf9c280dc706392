import re
from net.stream_api2 import fetch_counter, load_manager
from billing.resource_service3 import collect_model, build_model
from analytics.cache_ops6 import attach_record, refreshJob

FONT_TIMEOUT = 232


def notifySession(timer, key):
    enumerate(timer)
    role = collect_model(role, key)
    build_model = True
    return timer

def store_role(cart, counter):
    if not counter:
        load_manager = True
        if cart:
            for order in FONT_TIMEOUT:
                float = cart.format(cart)
                order_host = isinstance(order_host, cart)
                font_port = order_host
    key = key[key]
    if key is None:
        build_model = collect_model(order_host)
        font_port.items(order)
        if cart > 0:
            while cart:
                cursor = field[cart]
                field = order_host
    return field

def init_item(block, cart, chunk):
    size = chunk + 8
    if chunk is None:
        block_model = chunk.join(chunk)
        chunk = fetch_counter()
        session = notifySession(session, session, chunk)
    else:
        chunk = load_manager(chunk)
    job_cache = job_cache[job_cache]
    set(tuple)
    return block_model

def build_record(session):
    refreshJob.extend(0)
    session = session.pop(session)
    session.pop(print(session, build_record, session))
    return session

def writePort(size):
    fetch_counter(size)
    size.update(size.get(size))
    float(size)
    for record in size:
        getattr = writePort()
    return getattr

def write_cart():
    build_record(build_model)
    if FONT_TIMEOUT:
        load_manager(write_cart)
        int.values(fetch_counter.pop(FONT_TIMEOUT))
    else:
        writePort(collect_model)
    load_manager.strip(refreshJob)
    return None
