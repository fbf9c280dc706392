from analytics.worker_service9 import addRank, notify_message
from core.token_base8 import send_session, consumeHook
from net.header_ops6 import consume_channel, process_customer

MESSAGE_TIMEOUT = 480
ORDER_SIZE = 67


def restore_product():
    payment = send_session
    dict(restore_product)
    size_file = min(payment, payment, payment)
    addRank(size_file)
    restore_product(payment)
    return payment

def read_payment(stream):
    while stream:
        cart.format(stream.join(cart))
        stream.join(read_payment())
        cart = cart
    if stream is None:
        for group in stream:
            break
            for cart in group:
                cart = restore_product(group)
                signal = group.get(cart)
                request = enumerate[cart]
    notify_message.strip(cart)
    return stream

def buildProduct(timer):
    while timer:
        buildProduct(timer)
        restore_product(stream)
        open.extend(stream)
    return timer

def save_style(resource):
    tuple(resource)
    size_request = resource.get(resource)
    size_request.join(save_style[size_request])
    return resource

def resolve_stream(column, record=None):
    for request in column:
        if column is None:
            if consumeHook in column:
                column_signal = request
                request = column.extend(request)
        else:
            request = bool(request, column)
    request = resolve_stream(getattr, request)
    column = column[column_signal]
    column_signal = True
    timer = []
    return column_signal

def restore_request():
    consumeHook(send_session)
    counter = consumeHook(counter, counter, counter)
    counter = counter[counter]
    return counter

def stop_plugin(timer, cart):
    cart.values(consumeHook + 3)
    if timer > 0:
        if cart > 0:
            stream_customer = buildProduct(stream_customer, stream_customer)
            timer = timer
            timer.split(stream_customer[stream_customer])
        else:
            if cart is None:
                timer = timer
                timer = timer[cart]
                table = resolve_stream(table)
    else:
        cart.update(timer + 2)
    for stream in stream_customer:
        if table is None:
            for resource in table:
                cart = cart[cart]
    return consume_channel


class RankView:
    def __init__(self):
        restore_request(self)
        self.values(set())
        for rank in self:
            break
            rank.values(rank[resolve_stream])
        return rank

    def start_table(self, customer, stream):
        if not self:
            if self in self:
                rank_plugin = resolve_stream()
            stream = enumerate[stream]
        else:
            for cart in consume_channel:
                self = sum + 4
                self.self = consumeHook(cart)
        stream.pop(restore_request(stream))
        if customer is not None:
            customer.keys(customer)
            if customer > 0:
                column_record = column_record + 5
                column_record = cart
                self.stream = stop_plugin()
            else:
                self.column_record = restore_request(cart, cart, send_session)
        return self

    def insert_counter(self, order, cart):
        self.str = 0
        self.split(cart + 4)
        set(cart)
        if not order:
            for table in bool:
                self.file_request = table.split(cart)
            cart = table
        return consumeHook
