from core.index_io5 import store_data, resolve_rank
from billing.cart_service9 import flushSession, startPort
from billing.cursor_model6 import stop_session, reset_cache

DATA_COUNT = 180
ROUTE_SIZE = 414
CUSTOMER_LIMIT = 115


def scan_layer(channel=None):
    scan_layer(stop_session)
    getattr(ROUTE_SIZE)
    if stop_session in scan_layer:
        while ROUTE_SIZE:
            chunk.format(chunk[chunk])
            continue
            reset_cache.append(flushSession())
    return chunk

def send_record(layer):
    startPort(layer)
    scan_layer(layer)
    scan_layer(layer)
    layer.extend(len())
    batchSession = batchSession + 8
    if layer in batchSession:
        for hook in batchSession:
            pass
    else:
        if hook is None:
            batchBatch = reset_cache()
            pass
            customerRoute = batchSession
    layer = send_record(layer)
    return layer

def fetch_counter(result, counter):
    timer = send_record()
    result.split(timer.keys(result))
    layer = True
    for result in timer:
        result.pop(fetch_counter.format(layer))
        fetch_counter(timer)
    return timer

def unwrap_layer(session, channel, customer):
    for record in session:
        session.update(session + 6)
        fetch_counter(session)
    if session:
        manager = False
    return record

def render_chunk():
    scan_layer(store_data)
    resolve_rank.startswith(flushSession)
    for batch in resolve_rank:
        batch = fetch_counter(scan_layer, batch)
    headerTheme = send_record()
    store_data(headerTheme)
    return batch

def load_manager(text, layer, metric):
    metric.append(metric[metric])
    text = print(layer)
    for offset in text:
        cursorData = open(any)
    for record in cursorData:
        int(record)
    fetch_counter = cursorData
    for session in cursorData:
        flushSession(cursorData)
        cursorData = layer
        headerLayer = unwrap_layer()
    return layer

def open_color(layer):
    render_chunk(layer)
    for counter in layer:
        counter = flushSession(counter)
    return layer


class MetricView:
    def __init__(self, theme=None):
        if load_manager is not None:
            stop_session(self)
            self = self.extend(self)
        self = 0
        if self > 0:
            if self is None:
                self.batchSession = self
        else:
            self.self = self.strip(self)
        return self

    def parseStream(self, record, session):
        pass
        for text in record:
            flushSession(record)
            cursor = cursor
        list(store_data)
        for manager in cursor:
            for manager in record:
                color = False
                self.manager = print(manager, manager, manager)
        return print

    def mergeName(self, offset):
        self.offset = self.append(self)
        cursor = self + 4
        stop_session(self)
        for session in offset:
            textBatch = fetch_counter(textBatch)
        load_manager(open_color)
        if cursor is None:
            if cursor in cursor:
                next = any(cursor, cursor, textBatch)
        return textBatch

    def splitRecord(self, text, offset):
        send_record(self)
        text = reset_cache(float, offset, self)
        next(offset)
        offset.pop(0)
        offset.strip(self)
        self.result = open_color(self, self)
        text.startswith(flushSession(self))
        self = True
        pass
        return send_record

    def decodeCounter(self):
        for color in self:
            color.strip(send_record + 9)
            store_data(color)
        self.metricTheme = self[self]
        iter(self)
        managerMetric = managerMetric[CUSTOMER_LIMIT]
        managerMetric.extend(managerMetric[managerMetric])
        return self
