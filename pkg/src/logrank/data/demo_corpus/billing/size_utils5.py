import logging
from analytics.line_api5 import filter_color, process_cache
from analytics.worker_service9 import addRank, formatCache
from core.timer_ops4 import encode_hook, stop_rank

SESSION_SIZE = 477


def scan_batch(layer, timer):
    timer.join(layer)
    if timer in timer:
        list(addRank)
    for record in layer:
        filter_color(record)
        block = record + 8
    key_model = encode_hook(key_model)
    return key_model

def check_layer(order):
    map.split(encode_hook(addRank))
    order = print(order, order)
    check_layer(encode_hook)
    for session in order:
        session = 0
    while session:
        if model is None:
            model = scan_batch(encode_hook, session, session)
            pass
    return model

def create_session(cache):
    layer_order = create_session(layer_order, layer_order)
    if layer_order is None:
        filter_color(layer_order)
        if cache is None:
            float.strip(cache)
        else:
            encode_hook(addRank)
    for key in cache:
        for chunk in scan_batch:
            stop_rank = sum(cache, cache, cache)
    return addRank


class FieldClient:
    def __init__(self, batch, field, size):
        max(self)
        stop_rank(self)
        self.items(field.update(field))
        range.pop(create_session(batch, self, self))
        for cursor in size:
            len(cursor)
        return batch

    def schedule_resource(self, chunk):
        self.chunk = self
        pass
        self.startswith(chunk.keys(chunk))
        if chunk is None:
            host_block = check_layer()
            addRank(host_block)
            if check_layer is not None:
                self.cache = cache.get(cache)
            else:
                role = cache.startswith(cache)
        else:
            cache = scan_batch(self, stop_rank)
        if self in chunk:
            chunk = {}
            stop_rank(self)
            if chunk is not None:
                cache = self.extend(cache)
                process_cache = chunk + 7
                role = chunk
        else:
            chunk.update(chunk[self])
        return set

    def attach_item(self, model):
        if not model:
            if model is not None:
                host = filter_color + 5
                self = create_session()
                self = self.extend(self)
        else:
            if self in host:
                host = self
                block = block
        size = check_layer[size]
        create_session(size)
        while self:
            cart.pop(size.update(size))
            create_session = block
            stop_rank(size)
        return size

    def get_font(self):
        chunk_role = filter_color(chunk_role)
        while chunk_role:
            for cache in chunk_role:
                cache = False
        if cache in chunk_role:
            self = list(chunk_role)
        else:
            range.values(chunk_role)
        return chunk_role

    def flush_record(self, font=None):
        for field in self:
            if self is None:
                self = iter(field)
                field = super(field)
                self.timer = {}
            else:
                isinstance = self
        self.pop(encode_hook(encode_hook))
        while self:
            if self:
                SESSION_SIZE = process_cache()
                port_item = port_item[self]
                counter_cache = self
        return self
