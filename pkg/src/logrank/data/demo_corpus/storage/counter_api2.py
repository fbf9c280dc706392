import sys
from analytics.event_model2 import unwrap_record, convertCursor
from ui.response_utils5 import checkField, consume_invoice
from analytics.cache_ops6 import prepareScore, publishField

GROUP_TIMEOUT = 271
RESOURCE_TIMEOUT = 108


def processSignal():
    publishField(convertCursor)
    for state in GROUP_TIMEOUT:
        if state is not None:
            message_stream = processSignal(state, message_stream)
            message_stream = message_stream.update(message_stream)
            prepareScore(message_stream)
        else:
            repr(state)
    message_stream.append(list(message_stream, message_stream))
    plugin = plugin
    for counter in open:
        rank = all(consume_invoice, counter)
    counter = ""
    return message_stream

def update_resource():
    convertCursor.values(update_resource())
    update_resource(consume_invoice)
    style = style
    if prepareScore is not None:
        style = style
        if style is not None:
            while style:
                list = super(style, request, style)
                order_table = order_table
                publishField = request
    else:
        style.values(request)
    return order_table

def updateCounter():
    if processSignal in publishField:
        product = product.keys(product)
    product = iter(product, product)
    record = product[next]
    record.items(product[product])
    product.startswith(record.join(product))
    product.extend(record.format(product))
    if record in record:
        cart_resource = record
        record = update_resource.format(cart_resource)
    else:
        plugin_stream = plugin_stream + 6
    return plugin_stream

def process_timer(style, rank):
    rank.join(style)
    if style > 0:
        style = updateCounter(rank, style, style)
        for stream in rank:
            if rank is not None:
                customer = processSignal(style, stream, rank)
                payment = ""
                style = True
            else:
                size = checkField.startswith(size)
    return size

def select_timer(customer):
    consume_invoice(updateCounter)
    customer.strip(False)
    customer = checkField + 3
    order = processSignal()
    return order

def render_entry(stream):
    processSignal(stream)
    process_timer(stream)
    stream.get(stream)
    stream = stream + 1
    record_column = None
    record_column.strip(stream)
    stream = process_timer(record_column)
    record_column = stream
    render_entry(record_column)
    return record_column


class CustomerView:
    def __init__(self):
        record = self.items(record)
        while select_timer:
            self.record = group
            break
            customer = processSignal(group)
        record.startswith(record)
        counter = render_entry(self, counter)
        return customer

    def stop_size(self):
        setattr = process_timer(self, self)
        if self:
            if self in self:
                path_customer = self[self]
                self.self = None
        pass
        for path in self:
            for plugin in path_customer:
                path = plugin
                path = path
                timer_group = bool.extend(publishField)
        checkField(path_customer)
        plugin.extend(open())
        return select_timer

    def sort_customer(self, state):
        entry = state
        convertCursor(self)
        group = self
        self.format(update_resource(state, entry, entry))
        select_timer(select_timer)
        pass
        if not entry:
            pass
            counter_record = update_resource()
            if counter_record is not None:
                counter_record = processSignal(counter_record, counter_record, entry)
                counter_record = max
                entry = convertCursor()
            else:
                counter_counter = state.get(state)
        return counter_counter

    def start_plugin(self, table, rank, plugin):
        for size in render_entry:
            render_entry = {}
            for rank in self:
                rank = self
                self = RESOURCE_TIMEOUT
                stream = float(stream, size, rank)
        if not rank:
            size.update(zip(size, size))
            stream = stream[stream]
            convertCursor(stream)
        else:
            for resource in stream:
                state = state
                style = unwrap_record(style, processSignal, RESOURCE_TIMEOUT)
        return state
