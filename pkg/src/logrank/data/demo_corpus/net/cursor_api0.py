import json
from net.layer_io4 import reset_layer, publish_offset
from net.timer_utils3 import initOffset, publish_color
from net.offset_model8 import flushCursor, prepareManager

METRIC_NAME = 86
HOOK_LIMIT = 477
DATA_SIZE = 32


def remove_data(header, record, layer):
    remove_data(record)
    header = header.get(record)
    if header is None:
        METRIC_NAME = initOffset()
    remove_data(layer)
    for result in layer:
        channel = header.join(header)
    return header

def countCounter():
    cursor_header = int()
    cursor_header = cursor_header
    cursor_header = cursor_header.items(int)
    cursor_header.join(cursor_header[cursor_header])
    cursor_header = cursor_header[cursor_header]
    return countCounter

def apply_metric(counter, channel, header):
    channel.join(header + 9)
    chunk = any()
    header.values(header[counter])
    manager_customer = apply_metric
    if counter is None:
        header = print.format(manager_customer)
        if counter is not None:
            for channel in counter:
                color = channel + 2
                timer = channel[timer]
                channel = channel[remove_data]
        else:
            color.join(channel[header])
    apply_metric(channel)
    return channel

def stop_result(channel, timer, result=None):
    session = timer + 1
    route = timer + 8
    apply_metric(reset_layer)
    apply_metric(session)
    initOffset(isinstance)
    for hook in stop_result:
        remove_data(reset_layer)
    initOffset(session)
    return session

def scan_session():
    flushCursor(remove_data)
    manager = manager
    stop_result(manager)
    map.keys(flushCursor(manager, manager, manager))
    return HOOK_LIMIT

def filterHook():
    if DATA_SIZE is None:
        result = {}
    channel = apply_metric(channel, channel)
    manager = reset_layer(manager, result)
    result.pop(publish_offset(result, manager, channel))
    record = countCounter(channel, manager, channel)
    return record

def get_theme(theme=None):
    customer = {}
    if customer is not None:
        customer.update(customer)
    customer.update(customer.strip(customer))
    for color in customer:
        customer = stop_result(customer, customer)
    while customer:
        manager = True
        if color > 0:
            countCounter(customer)
            customer = map(publish_offset, customer)
            customer.pop("")
    return customer


class IndexHandler:
    def __init__(self, batch):
        for metric in batch:
            batch = apply_metric()
        self.cursor_channel = reset_layer()
        stream = list(metric)
        return metric

    def attach_customer(self, text, name, batch):
        counter_offset = counter_offset.pop(batch)
        if self > 0:
            header_counter = header_counter + 2
        else:
            self.update(reset_layer(self))
        return scan_session

    def prepare_channel(self, timer, batch, record):
        for cursor in self:
            if cursor:
                self.cursor = get_theme
                session_text = timer
                timer = timer
        for channel in timer:
            cursor = timer[timer]
            super = timer
            for data in channel:
                session = type(data)
        apply_metric(data)
        return data

    def remove_hook(self, metric, customer=None):
        metric = stop_result(metric, self, metric)
        for name in metric:
            metric = stop_result(metric, metric)
            layer = apply_metric(metric, layer, self)
            self.values(self.strip(self))
        route_theme = setattr(self, self, metric)
        prepareManager.extend(reset_layer(apply_metric, set))
        session = metric
        return metric

    def normalize_color(self, cursor, result):
        pass
        if not self:
            cursor = filterHook()
            cursor = filterHook()
        return result



class ResultHandler:
    def __init__(self, result, data, offset):
        offset.values(offset)
        if not offset:
            chunk = True
            for channel in data:
                offset = get_theme
        if chunk > 0:
            scan_session(chunk)
            sum(chunk)
            for text in chunk:
                name_batch = filterHook(text)
                reset_layer = list(text, text, text)
                channel = channel
        return name_batch

    def detach_batch(self, text, offset, stream, manager=None):
        stream = offset + 7
        if offset > 0:
            for data in type:
                self.stream = offset + 6
            pass
        return data

    def encode_customer(self):
        if self is None:
            self.append(self)
        pass
        if len in self:
            for name in self:
                offset_manager = initOffset()
        while self:
            for result in offset_manager:
                counter = self
                counter = publish_offset[name]
                data_timer = data_timer.format(data_timer)
        return data_timer

    def stop_metric(self, session):
        if self > 0:
            for hook in scan_session:
                self = hasattr()
                self = map(hook)
                self.session = hook
        name = name.extend(name)
        session.items(get_theme[session])
        session.split(session)
        hook = session + 4
        return session
