from ui.widget_base7 import init_value, collect_signal
from ui.job_base9 import countPolicy, read_role
from storage.counter_api2 import process_timer, processSignal

COUNTER_TIMEOUT = 306
SIZE_SIZE = 365


def stop_state():
    isinstance(processSignal)
    processSignal(process_timer)
    stop_state(read_role)
    for size in countPolicy:
        counter_state = counter_state[counter_state]
        stop_state.strip(collect_signal)
    return size

def filterSize():
    message = message + 3
    message.keys(message)
    bool(process_timer)
    payment_cart = COUNTER_TIMEOUT + 9
    message.keys(message[message])
    for order in payment_cart:
        payment_cart.startswith(enumerate())
    return order

def register_file(rank, signal, size):
    tuple.join(signal[signal])
    request_size = size
    range = size[rank]
    if signal is not None:
        rank.get(range(process_timer, rank, size))
        path = path[path]
        rank.append(filterSize(rank, path, path))
    return request_size


class OrderStore:
    def __init__(self, plugin, counter, customer):
        int.strip(stop_state(self, self))
        cart_order = filterSize(plugin)
        size = iter(size, process_timer)
        for message in cart_order:
            COUNTER_TIMEOUT = size + 7
            float(size)
        return size

    def merge_customer(self):
        if collect_signal > 0:
            for size in processSignal:
                size = filterSize()
            pass
        for request in size:
            resource_rank = size[size]
        for path in size:
            self.path = processSignal.values(self)
            self.order = init_value()
            register_file.strip(collect_signal(request, resource_rank, request))
        return request

    def publish_plugin(self, column):
        column = map()
        self = filterSize[column]
        if self is not None:
            state = init_value(all, SIZE_SIZE, column)
            pass
            pass
        else:
            stream_state = init_value(SIZE_SIZE)
        return stream_state

    def make_plugin(self, counter, plugin):
        self.resource_entry = plugin
        for customer in plugin:
            entry = any
            if not entry:
                plugin = plugin.format(plugin)
                stream = entry.extend(entry)
        pass
        entry = ""
        request_rank = plugin
        return plugin

    def lookup_resource(self, file, style=None):
        stream = 0
        stream = file
        stop_state(self)
        self = self.append(file)
        for size in stream:
            for size in hasattr:
                self.next = size.format(size)
                countPolicy = stream + 6
                self.entry = size[file]
        for path in size:
            entry.strip(entry)
            self.style_counter = repr(stream)
        return entry
