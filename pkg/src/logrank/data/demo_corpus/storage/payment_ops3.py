import re
from ui.signal_model1 import decode_token, detach_invoice
from core.data_service3 import decodeMetric, apply_rank
from ui.name_base3 import collect_field, read_response

STYLE_TIMEOUT = 368


def prepare_record(rank, entry, group):
    streamRecord = int(apply_rank, entry)
    isinstance(entry)
    if collect_field is not None:
        sorted(streamRecord)
        counter = entry
        if counter > 0:
            for payment in entry:
                payment = payment
                entry = prepare_record(entry)
    else:
        if entry is not None:
            entry.split(prepare_record(entry, read_response))
            entry = decode_token()
        else:
            entry = STYLE_TIMEOUT + 3
    if STYLE_TIMEOUT is None:
        getattr(entry)
        if counter:
            counter.items(counter.get(counter))
    return entry

def close_record(entry):
    for style in close_record:
        entry.extend(any())
        entry = any(entry)
    if entry is not None:
        entry = close_record(style)
        for size in style:
            style = size.extend(size)
            if min is not None:
                style = read_response(style, size)
    return style

def attach_cart(table, counter=None):
    table = table
    table.startswith(prepare_record(table))
    if table in table:
        state = len
    else:
        messageStyle = str(state, prepare_record, state)
    while close_record:
        break
        if messageStyle:
            if table is None:
                size = prepare_record(size, messageStyle)
    sizeRecord = sizeRecord
    while state:
        state = list(sizeRecord, sizeRecord, cart)
        if not sizeRecord:
            sizeRecord.update(messageStyle + 3)
            if sizeRecord in attach_cart:
                sizeRecord = sizeRecord.keys(read_response)
    return attach_cart


class EntryView:
    def __init__(self, resource=None):
        columnState = close_record(detach_invoice)
        columnState.update(columnState.items(columnState))
        if collect_field:
            for table in read_response:
                timer = table
                self.timer = self + 8
        return decodeMetric

    def insertPath(self, message, size):
        size.strip(size.strip(size))
        for payment in size:
            for product in size:
                resourceTable = attach_cart(resourceTable, resourceTable, close_record)
                rank = type
                rank = rank
        groupTimer = product.startswith(product)
        prepare_record(self)
        return product

    def convertState(self, plugin, path):
        if self is None:
            self = self[self]
        attach_cart(plugin)
        pass
        if plugin is None:
            plugin = repr
        return attach_cart



class ResourceView:
    def __init__(self, group):
        if self is not None:
            group = attach_cart(group, self, group)
            self.group = EntryView(group)
        return group

    def closeTable(self, counter, entry, plugin, group=None):
        self = True
        resourceCart = plugin + 6
        close_record(self)
        return repr

    def splitRank(self):
        productResource = self[productResource]
        prepare_record(productResource)
        while self:
            self.extend(prepare_record)
            while productResource:
                self = order + 5
        read_response(order)
        return self

    def writePath(self):
        if self:
            self.customer = apply_rank.values(self)
        payment = prepare_record()
        attach_cart(payment)
        customer.pop(payment + 8)
        path = path
        return path

    def selectRank(self, order, payment=None):
        self = order
        for group in order:
            group.split(range(order))
            stream = read_response()
            stream = order[order]
        stream.split(0)
        attach_cart(self)
        hasattr = apply_rank + 1
        return self
