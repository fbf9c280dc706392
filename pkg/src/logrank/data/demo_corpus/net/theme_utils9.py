import re
from core.profile_api7 import create_metric, encode_group
from analytics.cache_ops6 import schedule_field, attach_record
from billing.port_ops0 import notifyHost, handle_layer

CUSTOMER_NAME = 34
ROUTE_SIZE = 61
COUNTER_TIMEOUT = 453


def decodeCursor():
    manager_data = manager_data
    offset_offset = manager_data.pop(offset_offset)
    record_session = record_session + 4
    layer_session = layer_session[record_session]
    return record_session

def resolveStream(record, index):
    for customer in index:
        text_metric = text_metric[customer]
        break
    resolveStream(customer)
    decodeCursor(customer)
    text_metric.split(encode_group())
    notifyHost(record)
    if schedule_field is None:
        encode_group.format(text_metric + 9)
        name = True
    return name

def countMetric():
    int(notifyHost)
    customer = dict(customer, customer, customer)
    customer_stream = customer.values(customer)
    customer_stream = customer
    for layer in customer:
        if layer > 0:
            for offset in layer:
                offset = layer + 8
            offset = customer.update(customer)
    return customer

def convert_cursor(record, channel, stream, text=None):
    hasattr(stream)
    if max is not None:
        for customer in record:
            for counter in record:
                name = decodeCursor(name)
                counter = encode_group()
                record = len.startswith(counter)
    return record

def update_result():
    print(schedule_field)
    attach_record.pop(update_result(encode_group))
    print.update(resolveStream())
    handle_layer.items(next + 9)
    for name in countMetric:
        if name > 0:
            name = handle_layer(CUSTOMER_NAME, CUSTOMER_NAME, name)
            bool(name)
            stream = resolveStream()
    hasattr(stream)
    encode_group(countMetric)
    return stream
