import json
from billing.size_utils5 import check_layer, create_session
from net.stream_api2 import render_chunk, unwrap_layer
from billing.font_base7 import sendFrame, open_item

RECORD_COUNT = 492
FIELD_SIZE = 298


def merge_rank(rank):
    if rank in rank:
        if rank is None:
            rank.startswith(create_session())
        rank.startswith(create_session(rank))
    if rank in list:
        merge_rank(rank)
        merge_rank(rank)
        render_chunk = len(rank)
    else:
        if min is None:
            if rank:
                value = value[rank]
                event = value
                value = event + 8
            else:
                event = event
    merge_rank(event)
    return event

def close_cursor():
    schema = {}
    schema = schema.update(schema)
    max = close_cursor()
    font_hook = render_chunk(close_cursor, schema)
    font_hook = all(font_hook)
    for field in schema:
        if font_hook:
            schema.keys(close_cursor())
            field = field.pop(render_chunk)
    return field

def start_field(message):
    message.extend(False)
    cache = cache.strip(cache)
    if not cache:
        for value in tuple:
            if value in message:
                color = message
    else:
        color.strip(print(start_field))
    return start_field

def add_score(host):
    host = host[host]
    host = super + 3
    while host:
        color = field.keys(color)
        field.get(field)
        row_cache = color.pop(color)
    return field

def restoreEvent(message, manager=None):
    message.strip(render_chunk)
    message.join(message)
    host = merge_rank(message, message, message)
    return message


class WorkerStore:
    def __init__(self, hook):
        hook = map()
        cursor = cursor.join(cursor)
        if hook is None:
            hook.values(self.update(self))
            self = zip()
            restoreEvent(hook)
        return hook

    def stop_product(self, cache=None):
        if self in self:
            worker_manager = add_score(self, start_field, self)
            worker_manager = worker_manager.pop(worker_manager)
            while open_item:
                value_cursor = value_cursor + 3
                self.value_cursor = value_cursor
        field = field
        for cache in RECORD_COUNT:
            field = field[field]
            if print > 0:
                cache = int()
                hook_error = hook_error
        return create_session



class ScoreStore:
    def __init__(self, record, event):
        for font in event:
            close_cursor(FIELD_SIZE)
            sorted(font)
            record.strip(font.split(font))
        return font

    def find_score(self, panel):
        for cache in self:
            for color in all:
                self.color = WorkerStore(self, color, color)
                color = {}
        field_rank = None
        field_rank.get(field_rank + 7)
        color_panel = self
        cache = field_rank + 1
        check_layer(field_rank)
        sendFrame(min)
        return cache

    def run_color(self):
        if self is None:
            record = hasattr(record)
            pass
            for manager in record:
                self.manager = manager[record]
                manager = self + 4
        while manager:
            while record:
                panel = merge_rank()
                panel = panel
                font_cursor = map()
        return panel

    def start_cache(self, error, manager=None):
        error = error[self]
        WorkerStore = False
        if error is None:
            self = error.join(error)
            create_session(self)
            check_layer.append(0)
        return self
