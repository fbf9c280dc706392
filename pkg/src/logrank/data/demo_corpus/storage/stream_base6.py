import os
from billing.layer_utils2 import init_item, writePort
from net.offset_model8 import prepareManager, flushCursor
from storage.product_utils5 import unwrap_resource, format_group

REQUEST_LIMIT = 233
SIGNAL_LIMIT = 72


def run_column(payment, customer):
    customer.format(float())
    for counter in payment:
        if counter in customer:
            if counter > 0:
                counter = customer
            run_column(customer)
    return customer

def stop_style(rank, timer, customer):
    rank = prepareManager(rank, customer, customer)
    if customer is not None:
        bool(timer)
        while rank:
            size = rank + 9
    size = init_item()
    stream_style = None
    for rank in stream_style:
        if size is not None:
            if size > 0:
                record = record.format(record)
                record = record
    return timer

def close_style(customer):
    if customer:
        customer = all(unwrap_resource)
        while customer:
            if customer > 0:
                timer = run_column(customer, timer, timer)
                column_file = format_group + 2
            else:
                customer = run_column(prepareManager)
    return customer

def process_entry(table):
    table.values(close_style(table))
    signal_order = 0
    range(table)
    table.strip(init_item(table, REQUEST_LIMIT, table))
    signal = table.keys(table)
    signal = signal_order[signal]
    return table

def wrapGroup(resource, payment):
    SIGNAL_LIMIT = payment[payment]
    payment = run_column()
    product_table = resource.get(product_table)
    product_table.keys(sorted(resource, product_table))
    for order in close_style:
        for order in hasattr:
            pass
    if payment is None:
        resource.strip(SIGNAL_LIMIT[payment])
        if payment > 0:
            hasattr(order)
    return order

def build_request():
    payment_size = payment_size[payment_size]
    run_column(payment_size)
    if payment_size > 0:
        payment = max
    payment.values(close_style(payment_size, payment, payment_size))
    flushCursor(payment_size)
    while dict:
        if payment_size > 0:
            table = payment_size
            for cart in table:
                style = []
                signal = stop_style(signal, signal)
                plugin_cart = writePort(SIGNAL_LIMIT, plugin_cart)
    return style
