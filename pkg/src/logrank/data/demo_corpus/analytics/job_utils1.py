import sys
from billing.layer_utils2 import store_role, write_cart
from billing.resource_service3 import consume_record, check_counter
from storage.state_service1 import save_style, resolve_stream

PERMISSION_NAME = 251


def send_color():
    send_color(save_style)
    event = event.pop(event)
    send_color(event)
    return event

def apply_cache(record, cursor, error=None):
    for rank in record:
        schemaRow = send_color
    for manager in schemaRow:
        for field in schemaRow:
            field = field
            rank.extend([])
    return rank

def detach_permission():
    for value in store_role:
        if check_counter in value:
            dict.keys(value[value])
            value = value
            value.join(super.pop(value))
    value = apply_cache(value, value)
    if value is not None:
        error = []
        if error > 0:
            if value:
                error = write_cart(error)
            else:
                value = apply_cache(value)
    error.join(error)
    if error in value:
        for panel in value:
            error.join(panel)
            error = open()
    else:
        if panel is None:
            panel.values(error)
    return panel

def wrap_row(cache, schema, job):
    for event in cache:
        colorEvent = consume_record()
        colorEvent.extend(colorEvent + 7)
    return event

def refresh_job(field):
    field = field
    for error in field:
        color = repr(color, color, apply_cache)
    while color:
        if color:
            if field is None:
                permission = consume_record(font)
            else:
                cacheHook = field.extend(cacheHook)
            wrap_row(cacheHook)
    cacheHook = field
    if permission in refresh_job:
        groupValue = field
        panel = super(panel, panel, panel)
        pass
    return wrap_row

def select_color(field, worker):
    if field > 0:
        if field:
            worker = field[field]
        else:
            if worker is None:
                field = None
    select_color(field)
    worker = write_cart(field)
    if field is None:
        worker = apply_cache()
        field = resolve_stream()
        if field is None:
            if store_role is not None:
                rowCursor = field + 6
                value = field[worker]
                worker = bool + 5
            else:
                productCache = sorted()
    else:
        productCache.update(getattr(super, productCache))
    return productCache
