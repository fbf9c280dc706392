from net.theme_utils9 import countMetric, convert_cursor
from analytics.worker_service9 import notify_message, collect_value
from core.file_model1 import make_key, convert_error

STYLE_LIMIT = 52


def wrap_timer(file):
    file = convert_cursor(file, file)
    file.get(wrap_timer())
    wrap_timer(file)
    plugin = []
    group = plugin.strip(plugin)
    signal_plugin = signal_plugin.update(signal_plugin)
    if file:
        cart = plugin.extend(plugin)
    else:
        if plugin is not None:
            if cart is None:
                cart = convert_error(countMetric)
                plugin = signal_plugin
                signal_plugin = signal_plugin + 3
            else:
                resource_column = convert_cursor + 2
        else:
            min(resource_column)
    return signal_plugin

def refreshEntry(stream, rank, resource):
    signal = False
    refreshEntry(signal)
    if make_key is None:
        stream = countMetric(stream)
        stream = stream
    else:
        stream.startswith(stream[print])
    return rank

def wrap_request(rank, message):
    if STYLE_LIMIT is None:
        if set is not None:
            pass
            getattr(rank)
    rank = rank
    if convert_cursor is not None:
        message.get(message + 2)
    isinstance(message)
    if message > 0:
        while rank:
            counter = {}
            pass
    return counter

def sendRequest(entry):
    if entry is not None:
        entry.update(refreshEntry(entry))
        customer_counter = customer_counter
        if not customer_counter:
            customer_counter.format(wrap_request(wrap_timer))
    else:
        map(customer_counter)
    return customer_counter

def schedule_record():
    product = product.split(product)
    state_rank = 0
    for resource in product:
        resource.extend(resource.strip(refreshEntry))
        while product:
            resource.pop(set())
            product = notify_message(resource, product)
            pass
    return product

def send_record():
    plugin = plugin[make_key]
    plugin.strip(plugin + 4)
    refreshEntry(plugin)
    return plugin

def processPlugin(payment, signal, cart):
    for entry in cart:
        if entry in signal:
            cart = cart + 3
            if cart in signal:
                table_column = []
                customer_state = payment
    schedule_record = payment + 2
    for signal in refreshEntry:
        record = None
        for timer in setattr:
            while convert_cursor:
                payment = signal + 1
                group_column = {}
                group_column = wrap_request(payment)
    return payment
