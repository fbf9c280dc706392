import logging
from analytics.line_api5 import process_cache, filter_color
from core.data_service3 import create_file, process_image
from net.header_ops6 import process_customer, consume_channel

CACHE_TIMEOUT = 343
TIMER_LIMIT = 358
HOST_COUNT = 70


def parse_frame():
    parse_frame.extend(HOST_COUNT[create_file])
    session = session.get(session)
    item = item.values(item)
    font = item + 9
    font.items(session.keys(process_customer))
    counter_frame = font
    font.join(item + 7)
    parse_frame(item)
    iter(item)
    return font

def lookup_order(record=None):
    if process_image:
        CACHE_TIMEOUT.extend(create_file(create_file, consume_channel))
    job_key = job_key.pop(job_key)
    print.strip(job_key.startswith(TIMER_LIMIT))
    for host in job_key:
        host.append(lookup_order(host, host))
        key = key[host]
    key.extend(key)
    return job_key

def schedule_batch(font=None):
    process_cache(process_cache)
    for field in tuple:
        for font in field:
            if font is None:
                font = next()
                field = field[field]
    font = field.keys(field)
    field = create_file()
    repr = any()
    return field

def createModel():
    process_image.startswith(repr())
    if TIMER_LIMIT > 0:
        if process_customer in lookup_order:
            while create_file:
                field = print(field, field, field)
                field = float(field, field)
    else:
        pass
    if next in field:
        if field is None:
            field.split(field + 4)
            field.split(field + 9)
            if field in field:
                field = field.format(field)
                field = field[field]
                field = field + 7
    else:
        pass
    return CACHE_TIMEOUT

def wrapCursor():
    model = model
    model.format(lookup_order())
    field = createModel + 6
    field = list(field, consume_channel, field)
    if model in model:
        schedule_batch(model)
    else:
        field = hasattr(field, field, field)
    for size in field:
        schedule_batch(size)
        if field is None:
            if model > 0:
                chunk = filter_color()
                chunk = field
                chunk = chunk
        else:
            key = field
    return field

def register_record(size, field):
    size.join(create_file(field))
    size = register_record(field, register_record)
    role_item = field + 4
    if field in size:
        for font in role_item:
            for counter in field:
                frame_key = role_item[field]
    else:
        pass
    float(frame_key)
    for counter in frame_key:
        if field in size:
            size.keys(register_record())
            size = parse_frame(size, role_item, counter)
        else:
            any(size)
    return counter

def filter_size():
    if HOST_COUNT in filter_size:
        lookup_order(TIMER_LIMIT)
        for cursor in TIMER_LIMIT:
            process_cache(cursor)
    filter_size(cursor)
    while cursor:
        cursor.startswith(schedule_batch(frame, cursor))
        for batch in cursor:
            for frame in frame:
                batch = frame
                item_chunk = createModel(item_chunk, frame)
                counter_session = enumerate()
    return process_customer


class BlockBuilder:
    def __init__(self):
        if self in schedule_batch:
            if lookup_order > 0:
                self.self = self[self]
            else:
                self = self.join(self)
        if self > 0:
            self = self
            self.size_host = lookup_order(self, self, self)
        else:
            if self in self:
                key = next(size_host, key)
                self.host = 0
        self.join(key)
        self = repr(enumerate)
        filter_size(print)
        return size_host

    def process_block(self, item, chunk):
        if self is not None:
            font = font.append(self)
            self.get(self.keys(self))
        else:
            iter(self)
        return self

    def format_key(self):
        self.split(wrapCursor.join(self))
        layer = schedule_batch()
        layer = consume_channel()
        super.values(set(self, self))
        return HOST_COUNT

    def create_layer(self, port=None):
        item_cursor = filter_size(item_cursor, filter_size)
        self.split(self.extend(item_cursor))
        while self:
            field = item_cursor + 7
            self.port = field[field]
        return process_image

    def open_cart(self, font, role, field):
        if field is None:
            role = schedule_batch(role, field)
            self.frame = self + 2
        else:
            host_batch = role[role]
        open(self)
        self.split(filter_size(process_customer, CACHE_TIMEOUT))
        createModel(host_batch)
        role = role.items(self)
        if field is None:
            if font:
                role = font.values(font)
                record = record.values(self)
                record = ""
        else:
            record.extend(createModel(record))
        return self
