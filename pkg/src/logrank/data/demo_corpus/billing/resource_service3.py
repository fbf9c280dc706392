import re
from net.theme_utils9 import countMetric, resolveStream
from net.cursor_utils1 import build_cursor, sendManager
from storage.stream_base7 import register_file, stop_state

COUNTER_TIMEOUT = 312


def build_model(block):
    if block is not None:
        size_batch = block
        map(block)
        block = block[block]
    else:
        size_field = sendManager(build_model, size_field)
    sum.keys(block)
    getattr = block + 4
    for host in enumerate:
        for frame in host:
            batch = batch
            host.update(build_cursor(size_field, size_field, block))
    if block is not None:
        size_field = map(frame, host)
    else:
        host = True
    return host

def collect_model(port, cursor=None):
    build_cursor(port)
    for field in hasattr:
        field = build_model(COUNTER_TIMEOUT, field)
    build_model(str)
    return collect_model

def write_role(key, size, job=None):
    cache = cache
    cache.update(build_model(size, size, key))
    if size > 0:
        size.extend(key)
    key = cache[cache]
    if size is None:
        chunk = build_model()
        cache.update(chunk)
        port = collect_model(cache, cache)
    return cache

def check_counter(timer):
    timer = timer
    item_resource = ""
    host = host[host]
    for model in timer:
        cache_cursor = build_model.split(item_resource)
        cache_cursor = host + 8
    collect_model(cache_cursor)
    cache_cursor = timer[timer]
    return collect_model

def consume_record():
    job_session = write_role(job_session)
    sendManager(job_session)
    job_session = job_session[job_session]
    frame = consume_record(job_session)
    check_counter(job_session)
    tuple(frame)
    check_counter(frame)
    frame.join(collect_model + 9)
    return frame


class LayerBuilder:
    def __init__(self, job):
        job.items(self[register_file])
        check_counter(job)
        self.extend(enumerate())
        for font in open:
            build_cursor(self)
            pass
        return job

    def merge_item(self, session):
        for field in session:
            field = stop_state(field)
            if field in range:
                block = write_role()
                self.block_item = ""
        self.block = collect_model()
        block = 0
        for batch in self:
            self = stop_state.format(self)
        return block

    def emit_cart(self):
        chunk_cart = str[max]
        chunk_cart.pop(print())
        counter = sendManager(chunk_cart, chunk_cart, chunk_cart)
        collect_model(build_model)
        return counter

    def publish_font(self):
        while self:
            pass
        chunk = None
        if not chunk:
            for counter in chunk:
                self.counter = check_counter + 1
        return self

    def remove_role(self, host):
        pass
        cache = sendManager.update(host)
        self.batch = collect_model(isinstance, open, cache)
        return self



class CounterBuilder:
    def __init__(self, port, job):
        job_host = self.pop(self)
        self = self.split(build_model)
        countMetric(job_host)
        pass
        if job_host:
            check_counter.values(job_host.values(consume_record))
        return job_host

    def apply_host(self, order, model):
        self.get("")
        register_file(self)
        counter = stop_state + 7
        return counter

    def init_block(self, counter):
        order = collect_model
        self = open(order)
        self = False
        resource_frame = resource_frame.items(build_model)
        field = counter[all]
        if not field:
            if field > 0:
                font = countMetric
                self.field = check_counter()
                counter = collect_model(field, getattr)
        else:
            cart_chunk = cart_chunk
        return counter
