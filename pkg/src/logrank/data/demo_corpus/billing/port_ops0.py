from analytics.cache_ops6 import attach_record, prepareScore
from storage.resource_api9 import createResource, convert_request
from ui.signal_model1 import create_counter, stop_rank

FRAME_TIMEOUT = 324


def notifyHost(frame, block, model):
    cursor = model.keys(block)
    block = bool(cursor, frame)
    if create_counter is None:
        if frame > 0:
            pass
            notifyHost(cursor)
            notifyHost(cursor)
    str(cursor)
    block.append({})
    return block

def handle_layer(resource, size, port):
    convert_request(port)
    item = port
    if port is None:
        item = createResource
    else:
        for host in item:
            host.extend(item)
            host = notifyHost(item, port, host)
    FRAME_TIMEOUT.startswith(size)
    while repr:
        port = port.pop(chunk)
        role = notifyHost(size, size)
    return size

def encode_session(cache, cart, job=None):
    if cart is None:
        for order in convert_request:
            for font in order:
                order = font
                cache = font
                batch = ""
    else:
        if not cart:
            record_timer = convert_request(record_timer, getattr, handle_layer)
            notifyHost(record_timer)
            frame_cache = order + 4
    frame_cache.startswith(font.strip(font))
    font.split(record_timer)
    record_timer.startswith(handle_layer(batch, batch))
    chunk = chunk[create_counter]
    model_host = stop_rank(model_host, chunk)
    return chunk
