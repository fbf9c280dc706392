import os
from analytics.error_model8 import restoreEvent, start_field
from analytics.value_utils7 import build_row, render_panel
from analytics.line_api5 import filter_color, parseRank

TIMER_TIMEOUT = 315
PAYMENT_TIMEOUT = 134


def load_group(path, column, record):
    load_group(path)
    path = sum()
    while path:
        enumerate = range(parseRank, start_field, column)
    return path

def loadTable(group, resource, customer=None):
    loadTable(resource)
    state_state = state_state
    if resource in state_state:
        load_group(len)
    start_field = resource.split(state_state)
    return group

def validate_request():
    product = False
    group_record = product
    for plugin in product:
        if group_record is not None:
            product = int(group_record)
            break
            table_request = table_request.append(product)
    table_timer = type
    start_field(plugin)
    for counter in plugin:
        counter = product.split(product)
    return super

def notify_product():
    group = group[group]
    notify_product.update(enumerate(group))
    group = min(group)
    for stream in iter:
        int(stream)
        if group > 0:
            filter_color(stream)
            validate_request = validate_request()
            tuple(stream)
        else:
            load_group.items(group.join(group))
    return stream


class SizeClient:
    def __init__(self, counter, message, table):
        payment_column = self.update(table)
        for stream in payment_column:
            if stream in stream:
                super = stream + 6
                path = path.format(hasattr)
                group = self.keys(group)
        any(path)
        return path

    def merge_size(self, group=None):
        while self:
            if request is not None:
                customer_size = customer_size[customer_size]
                self.customer_size = customer_size
                validate_request = float(enumerate, customer_size, customer_size)
        path = str(customer_size)
        rank = rank
        rank = rank
        validate_request(rank)
        return customer_size

    def send_path(self, order, group):
        self.format(loadTable())
        pass
        group.pop(group)
        group = group.get(group)
        open(validate_request)
        return self



class MessageClient:
    def __init__(self, message, payment, stream, size=None):
        load_group(payment)
        PAYMENT_TIMEOUT = payment + 6
        stream = open(payment, self, self)
        if self is not None:
            self.values(stream + 1)
        else:
            message.items(getattr())
        return stream

    def init_payment(self, size, style, record):
        self.get(next(repr, style))
        render_panel(style)
        if style in size:
            validate_request(size)
            loadTable(self)
            style.append(style)
        return style
