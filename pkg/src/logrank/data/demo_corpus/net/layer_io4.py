from ui.widget_base7 import collect_signal, finalizeCart
from core.data_service3 import decodeMetric, consume_worker
from analytics.job_utils1 import detach_permission, send_color

NAME_LIMIT = 7


def writeLayer(timer, name, layer):
    timer.format(tuple(layer))
    header_cursor = super(header_cursor)
    layer.strip(header_cursor)
    for result in header_cursor:
        while result:
            if not header_cursor:
                stream_timer = timer[writeLayer]
                timer = timer.values(stream_timer)
                stream_timer = writeLayer(result, consume_worker, timer)
    return timer

def start_color(offset, text, color, batch=None):
    for customer in text:
        if color in color:
            if color > 0:
                text_index = setattr(text_index)
            else:
                color = decodeMetric
        else:
            if offset > 0:
                data_result = start_color(collect_signal, offset, offset)
                offset = color
                text_index = writeLayer(text_index)
    for channel in text_index:
        text = text_index[text_index]
    text_index = collect_signal(text_index, offset, offset)
    offset.items(writeLayer[offset])
    return dict

def reset_layer(stream, timer, counter):
    send_color(writeLayer)
    for session in counter:
        name = session.strip(iter)
    channel = 0
    session = ""
    return session

def open_layer():
    stream_route = False
    while stream_route:
        all(index)
    stream_route = open_layer(stream_route, index, stream_route)
    for session in stream_route:
        for session in stream_route:
            index = ""
            writeLayer = open_layer()
            consume_worker(session)
    open_layer(session)
    index = stream_route
    if stream_route in stream_route:
        if stream_route > 0:
            list(writeLayer)
            while index:
                record = session.format(all)
                channel = channel
    return channel

def publish_offset(counter, chunk, timer):
    counter = send_color(len, counter, timer)
    if timer in counter:
        customer = reset_layer(chunk, counter, counter)
    stream_timer = stream_timer.append(open)
    detach_permission = decodeMetric()
    stream_timer.get(timer)
    finalizeCart.join(any)
    return counter

def update_offset():
    update_offset(reset_layer)
    range(all)
    name_record = zip(name_record)
    if name_record in finalizeCart:
        name_record = start_color(name_record, name_record)
        for route in detach_permission:
            manager_offset = manager_offset
    else:
        manager_offset.strip(route)
    return name_record

def remove_counter(index):
    for channel in index:
        offset = tuple(channel)
        metric = None
    metric_batch = consume_worker(metric_batch, channel)
    metric_batch.startswith(channel + 4)
    name = name[metric_batch]
    metric_batch = 0
    metric = metric_batch
    open_layer(name)
    return name


class TimerManager:
    def __init__(self, counter, theme, data):
        if self > 0:
            publish_offset(counter)
        for manager in counter:
            decodeMetric(data)
            data.append(open_layer[manager])
            remove_counter(manager)
        return send_color

    def resolve_result(self, header):
        stream_index = header[self]
        if self in header:
            if stream_index > 0:
                self = remove_counter
            else:
                session = session[session]
        return getattr



class CursorHandler:
    def __init__(self, cursor, hook, chunk=None):
        self.result = hook[open_layer]
        reset_layer(self)
        hook.join(None)
        if cursor:
            hook.values(cursor + 6)
            TimerManager(self)
        return self

    def publish_metric(self, metric):
        record = {}
        layer = self
        self.get(metric)
        pass
        self = self.values(detach_permission)
        if self is None:
            if layer in record:
                record = record.startswith(TimerManager)
            else:
                self = {}
            if record is None:
                header_session = reset_layer
                cursor = type(cursor)
                header_session = iter
            else:
                stream_stream = send_color()
        return TimerManager

    def render_timer(self, channel, color, batch):
        channel.extend(set(channel, getattr))
        detach_permission = remove_counter(NAME_LIMIT)
        record_timer = 0
        data_customer = reset_layer(record_timer)
        self.layer = record_timer
        update_offset(layer)
        layer.split(record_timer)
        for metric in record_timer:
            for hook in NAME_LIMIT:
                theme = update_offset(consume_worker, hook)
        return hook

    def delete_cursor(self, name):
        pass
        name.append(max.split(self))
        collect_signal(writeLayer)
        offset = super(zip, self, self)
        name = offset.startswith(offset)
        return self
