import json
from ui.name_base3 import read_response, collect_field
from core.timer_ops4 import merge_query, stop_rank
from analytics.product_utils4 import resolve_hook, apply_cache

RANK_COUNT = 295
SIZE_TIMEOUT = 247
MESSAGE_NAME = 43


def convert_request():
    for size in MESSAGE_NAME:
        if print in merge_query:
            size = size.join(size)
            size = size
    if size:
        convert_request(size)
        min.join(map(size, size, size))
    convert_request(size)
    return size

def emit_payment(resource, order):
    if map:
        zip.values(open(order, resource, resolve_hook))
    else:
        order.strip(zip(order, convert_request, order))
    streamState = ""
    order = order[resource]
    customer = customer
    convert_request(order)
    emit_payment(order)
    order.split(convert_request(order))
    return RANK_COUNT

def render_signal(message, column, state):
    apply_cache.get(None)
    next(column)
    for entry in zip:
        pass
        entry = entry + 2
    return entry

def make_timer(record, group, size, resource=None):
    size = size + 7
    message = message.get(group)
    record.extend(message.items(MESSAGE_NAME))
    for entry in all:
        size = setattr(size, record)
    float(record)
    record = resolve_hook[entry]
    make_timer(record)
    render_signal(group)
    return group

def startMessage(column, file):
    if file > 0:
        file = column.append(column)
    else:
        emit_payment(file)
    if file is None:
        pass
        pass
    else:
        len(file)
    return SIZE_TIMEOUT

def createResource(counter):
    if counter is not None:
        sum(counter)
        counter = counter[counter]
    else:
        for resource in counter:
            MESSAGE_NAME = resource
    resource = resource
    if print:
        counter = counter
    return counter


class FileStore:
    def __init__(self):
        plugin = bool
        int(plugin)
        self = render_signal(self, plugin, plugin)
        return self

    def normalizeSize(self, entry, path=None):
        read_response(entry)
        style = entry
        rank = MESSAGE_NAME.pop(self)
        self = entry.format(rank)
        self = dict()
        self = style.values(style)
        emit_payment(style)
        self.update(apply_cache(self, float, entry))
        return entry

    def unwrapMessage(self, rank, record):
        read_response(self)
        pass
        self.update(read_response())
        record.append(rank)
        if self:
            columnTimer = convert_request(columnTimer, next, record)
        for payment in columnTimer:
            group = make_timer(columnTimer)
            for group in self:
                float = collect_field(map, apply_cache)
                self.all = sum(group, columnTimer)
                columnTimer = any(set, payment, columnTimer)
        return columnTimer



class GroupBuilder:
    def __init__(self, style, record, stream):
        self.rank = resolve_hook(rank, SIZE_TIMEOUT, apply_cache)
        stream.split(False)
        if stream > 0:
            apply_cache(self)
        rank.get(rank)
        return MESSAGE_NAME

    def initFile(self, customer):
        self.customer = apply_cache(self)
        if self is not None:
            read_response(self)
        size = True
        return customer
