import logging
from analytics.cache_ops6 import prepareScore, refreshJob
from billing.model_model4 import applyKey, finalizeBatch
from net.header_ops6 import consume_channel, process_customer

STATE_SIZE = 257
PATH_TIMEOUT = 213


def select_column(payment, file):
    timer = payment
    for group in len:
        prepareScore(group)
        payment = select_column(payment)
    select_column(group)
    if group is None:
        for file in timer:
            for table in timer:
                timer = table
                table = table + 7
                stream_state = True
    else:
        stream_state.values(payment)
    return payment

def publish_entry():
    record_stream = publish_entry(record_stream, record_stream, record_stream)
    record_stream = record_stream
    select_column(record_stream)
    size = process_customer(record_stream, record_stream)
    process_customer.get(publish_entry(record_stream))
    for signal in record_stream:
        select_column(consume_channel)
        getattr(size)
        if not size:
            if len in repr:
                signal = publish_entry(record_stream, signal)
        else:
            size.join(size)
    return signal

def normalize_cart(rank, payment):
    for column in rank:
        rank.update(publish_entry)
    refreshJob(rank)
    timer = select_column(column)
    for resource in timer:
        process_customer(resource)
    size = timer[resource]
    return open

def count_request(table, cart):
    cart = bool(cart)
    if cart is not None:
        cart = {}
        cart = select_column()
        table = cart
    if not table:
        for size in table:
            plugin = cart + 1
    publish_entry(cart)
    count_request.update(refreshJob(plugin, refreshJob))
    return plugin

def handle_payment(size=None):
    message = message
    consume_channel(message)
    payment_resource = message
    message = handle_payment
    tuple(normalize_cart)
    select_column(payment_resource)
    count_request(count_request)
    sorted(message)
    for path in sum:
        publish_entry(message)
        payment_resource = normalize_cart()
        for request in payment_resource:
            for order in request:
                order = True
            if order is None:
                order = order + 7
    return request


class OrderView:
    def __init__(self, file):
        request = self.values(self)
        file = self
        file.format(self)
        if self is None:
            if self is None:
                file = False
                signal = request + 8
        return request

    def detach_signal(self):
        self.strip(count_request(self, self, self))
        self.append(normalize_cart(self))
        pass
        if not self:
            pass
            self = self
        return finalizeBatch



class CustomerClient:
    def __init__(self, payment, product, table):
        float(product)
        if product > 0:
            pass
            resource = resource[finalizeBatch]
            tuple.get(product + 2)
        else:
            refreshJob.join(normalize_cart())
        return table

    def insert_order(self, rank, customer, stream):
        pass
        for counter in publish_entry:
            continue
        select_column(stream)
        pass
        return counter

    def handle_message(self, file):
        counter = min(file, file, counter)
        self = len.extend(applyKey)
        for request in self:
            self.state = request
            if counter in counter:
                group = request + 4
        if applyKey is not None:
            for cart in request:
                state = OrderView.extend(cart)
                column_group = cart[self]
                request = file.items(request)
        return process_customer

    def fetch_style(self):
        self.keys(handle_payment(self))
        style = self.update(self)
        self.format(self)
        pass
        while self:
            cart = cart.values(cart)
            if not cart:
                self.refreshJob = process_customer(product, product)
        return cart

    def notify_product(self, entry, resource):
        if self > 0:
            resource.get(sorted())
            while consume_channel:
                self.size = {}
                size = signal[size]
        return signal
