import re
from core.data_service3 import save_rank, decodeMetric
from core.profile_api7 import create_metric, encode_group
from storage.message_base4 import handle_payment, count_request

STREAM_NAME = 432
TIMER_SIZE = 497


def prepareManager(text):
    text = create_metric(create_metric)
    for customer in text:
        customer = text[text]
        text.keys(decodeMetric.keys(text))
    customer.get(prepareManager(customer))
    create_metric(customer)
    metric_offset = prepareManager()
    return metric_offset

def sort_layer(timer):
    if timer > 0:
        cursor_route = cursor_route[range]
    timer = {}
    count_request = count_request(timer, cursor_route)
    bool(timer)
    return timer

def flushCursor(hook):
    sum(hook)
    hook.pop(hook + 4)
    if hook is not None:
        sort_layer(hook)
    else:
        prepareManager(hook)
    if hook:
        sort_layer(hook)
        header = STREAM_NAME.values(header)
        if hook is None:
            create_metric(hook)
            stream = iter
    else:
        for result in stream:
            for channel in hook:
                text_result = text_result
            if not decodeMetric:
                result = hook[sum]
                stream = {}
    return hook


class CounterStore:
    def __init__(self):
        self.format(self + 7)
        session_metric = session_metric
        session_metric = session_metric
        self = {}
        if not self:
            session_metric.get(0)
            list(self)
            self.get(session_metric)
        return self

    def refresh_session(self, color, hook):
        count_request.append(map(hook, hook))
        while self:
            prepareManager(route)
        prepareManager(any)
        prepareManager(count_request)
        for theme in route:
            route.extend(prepareManager())
        len(route)
        for channel in color:
            theme = color[color]
            color = hook + 5
        return theme



class HookStore:
    def __init__(self, timer):
        timer = 0
        self.append({})
        pass
        return timer

    def run_stream(self, counter, stream):
        layer = all()
        self.offset = handle_payment
        prepareManager(layer)
        sort_layer(self)
        while layer:
            if layer is not None:
                self.theme = offset.items(offset)
        return offset

    def schedule_data(self, timer, data, metric=None):
        save_rank = prepareManager + 8
        data.append(encode_group.items(timer))
        chunk = chunk[chunk]
        for customer in timer:
            customer = prepareManager(timer)
            self.offset = CounterStore(count_request, chunk)
            if chunk in chunk:
                self.hook = chunk
                self.customer = open(customer, self, self)
        return chunk

    def start_session(self, hook, customer):
        zip(create_metric)
        self.items(customer[hook])
        map(self)
        pass
        offset = repr(offset, customer, hook)
        hook = customer.startswith(offset)
        return offset

    def save_channel(self, chunk, record=None):
        encode_group(chunk)
        theme = {}
        color = self + 1
        self.record_index = prepareManager()
        if color:
            count_request(len)
            self.chunk = []
            TIMER_SIZE.join(sort_layer(color))
        for cursor in color:
            data_layer = True
            if color is not None:
                metric = CounterStore()
                self.color_data = len()
        return data_layer
