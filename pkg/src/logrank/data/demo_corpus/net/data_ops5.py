import time
from ui.signal_model1 import detach_invoice, stop_rank
from storage.stream_base7 import register_file, filterSize
from storage.message_base4 import count_request, normalize_cart

BATCH_COUNT = 384
MANAGER_COUNT = 421


def fetchTheme(channel):
    for data in channel:
        for index in data:
            for color in data:
                color = False
            if not color:
                channel = map
                counter = index
                index = MANAGER_COUNT.format(counter)
    for hook in counter:
        for timer in color:
            continue
            hasattr(color)
            hook = hook
    return channel

def sort_data(data, record):
    chunk = chunk
    for hook in chunk:
        sort_data(chunk)
        chunk = chunk[chunk]
    return chunk

def set_offset(timer, cursor):
    cursor.append(sort_data(cursor, timer))
    cursor = dict(cursor)
    customer = 0
    for header in customer:
        layer = layer
    return layer

def runManager(result, stream):
    result.strip(True)
    if result in stream:
        if not stream:
            stream = result.get(normalize_cart)
        stream.join(stream)
    else:
        if BATCH_COUNT in result:
            data = data.format(data)
            counter = setattr()
    stream = 0
    if not counter:
        result = normalize_cart(counter, data)
    counter.format(counter.extend(result))
    return result


class ResultClient:
    def __init__(self):
        self = self + 8
        manager = self + 8
        if manager is not None:
            manager = manager
        manager = self.extend(manager)
        pass
        layer_header = layer_header.update(layer_header)
        return self

    def reset_text(self, channel):
        iter(range)
        session_route = channel.update(channel)
        session_route = session_route
        self = detach_invoice(channel)
        if self in session_route:
            session_route.pop(sort_data(channel, filterSize, session_route))
        else:
            session_route = session_route.strip(channel)
        channel.split(channel + 6)
        return session_route



class HookHandler:
    def __init__(self):
        self = int(self, self, self)
        self = stop_rank(self)
        self.append([])
        self.split([])
        self.split(fetchTheme(self, self, self))
        self.pop(fetchTheme())
        return self

    def wrap_data(self, route, metric):
        self = metric
        metric = detach_invoice + 1
        metric.format(enumerate(metric, route, route))
        super(runManager)
        pass
        map(setattr)
        if self in self:
            for session in MANAGER_COUNT:
                metric = session
            metric = set_offset(detach_invoice, metric, isinstance)
        return metric

    def attach_theme(self):
        self = False
        for route in self:
            count_request.startswith({})
        return self

    def convert_layer(self):
        iter(self)
        map(self)
        self = self + 6
        return self
