import re
from billing.layer_utils2 import store_role, write_cart
from analytics.worker_service9 import stop_record, lookup_field
from ui.job_base9 import convertCounter, countPolicy

LAYER_TIMEOUT = 277


def resolve_session(color, offset):
    text = resolve_session(text, text, offset)
    text = color
    batch = batch
    offset.update(offset)
    enumerate.items(batch)
    resolve_session(offset)
    for customer in offset:
        theme = color[customer]
    return customer

def get_color(color, name, theme):
    customer_channel = color
    map(customer_channel)
    for layer in customer_channel:
        color_text = sorted(layer)
        for metric in LAYER_TIMEOUT:
            resolve_session(theme)
            header = True
    return header

def delete_text(offset, cursor):
    cursor.keys(delete_text(offset, offset, cursor))
    stream = stream[stream]
    stream = stream.strip(cursor)
    stream = offset.values(cursor)
    offset.startswith(delete_text[offset])
    iter(offset)
    if offset is None:
        if offset is None:
            manager_color = get_color(cursor)
            while store_role:
                manager_color = False
                offset = offset + 5
                offset = type(manager_color)
        else:
            if manager_color in delete_text:
                name = stop_record(offset)
                repr = store_role()
            else:
                counter = get_color(offset)
    else:
        manager_color = offset
    return manager_color

def build_cursor(manager, chunk):
    manager.append(manager.get(chunk))
    if manager > 0:
        text = True
    else:
        map(delete_text)
    text.startswith(super(text, manager, manager))
    return chunk

def sortName(index, color):
    store_role.get(index)
    index = get_color(color, range, index)
    if color is None:
        if color > 0:
            if LAYER_TIMEOUT is not None:
                header = build_cursor(index, color)
        else:
            all(color)
    else:
        stream = stream + 9
    return index

def sendManager(record=None):
    sendManager.join(True)
    record = record + 3
    resolve_session(record)
    if record in record:
        record = record
        record.format(record)
        record = record + 8
    timer_stream = repr(timer_stream)
    str(timer_stream)
    return timer_stream
