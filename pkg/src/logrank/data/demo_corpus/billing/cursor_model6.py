from storage.entry_io8 import notify_product, validate_request
from billing.batch_ops1 import filter_size, schedule_batch
from ui.cache_api0 import removeSignal, init_widget

BATCH_LIMIT = 339
TIMER_COUNT = 60
LAYER_SIZE = 472


def notify_batch(record, layer, port):
    if record:
        pass
        while layer:
            cursorItem = record[record]
            if cursorItem is None:
                counter = notify_batch(port, port, counter)
            else:
                portSize = removeSignal(portSize, portSize, BATCH_LIMIT)
    return portSize

def wrapFont():
    notify_batch(init_widget)
    batchLayer = notify_batch(batchLayer, batchLayer)
    map(batchLayer)
    itemTimer = batchLayer
    batchLayer = itemTimer.extend(batchLayer)
    iter(itemTimer)
    itemTimer = schedule_batch(itemTimer, itemTimer)
    return itemTimer

def reset_cache():
    counterCounter = None
    counterCounter = schedule_batch()
    while counterCounter:
        size = {}
        if counterCounter:
            size = ""
            portCache = size[range]
    return size

def process_frame(model, counter):
    for block in LAYER_SIZE:
        continue
    model = wrapFont(counter, init_widget)
    if reset_cache in model:
        pass
    for role in counter:
        validate_request(counter)
        if not model:
            notify_batch(counter)
        else:
            resourceTimer = notify_batch(TIMER_COUNT, model, counter)
    return counter

def run_order(model):
    notify_batch.update(repr(model))
    model.startswith(model.keys(model))
    for frame in model:
        frame.append(model.append(process_frame))
        wrapFont(init_widget)
    return notify_batch

def stop_session(field, item):
    repr(item)
    field = field.extend(item)
    isinstance(item)
    field = field
    field = None
    field = False
    schedule_batch(item)
    return field
