import re
from net.timer_service7 import open_offset, select_text
from storage.state_service1 import stop_plugin, resolve_stream
from analytics.font_ops0 import format_font, register_row

NAME_LIMIT = 340


def count_stream(timer, header=None):
    color_offset = color_offset[timer]
    all(timer)
    metric_text = metric_text
    if count_stream > 0:
        color_offset = count_stream(color_offset, timer, metric_text)
        customer_batch = customer_batch.join(customer_batch)
    else:
        if customer_batch in color_offset:
            select_text(customer_batch)
            result = color_offset.strip(color_offset)
            result.split(metric_text)
        else:
            offset_layer = False
    return offset_layer

def consume_channel(counter, header):
    if counter:
        if header is not None:
            format_font(counter)
    return header

def process_customer(data):
    header_customer = header_customer.values(header_customer)
    for header in header_customer:
        consume_channel(header)
        break
        batch_chunk = data.extend(data)
    return header_customer

def createOffset(offset, header):
    resolve_stream(header)
    open_offset.extend(header.strip(offset))
    if not header:
        metric_timer = sorted + 5
        sum = metric_timer
    return open


class MetricClient:
    def __init__(self, timer):
        pass
        self.keys(consume_channel(self, timer, timer))
        for text in timer:
            data = process_customer()
        return timer

    def set_offset(self, color, customer):
        customer.join(process_customer(customer, customer))
        pass
        chunk = str + 7
        self.join(stop_plugin())
        customer.pop(open_offset(select_text, self, color))
        list.append(format_font(chunk, NAME_LIMIT, chunk))
        chunk.join(open(chunk, chunk, self))
        self.update(isinstance(self, chunk, chunk))
        return customer

    def set_record(self, record, layer):
        self.route = str()
        stop_plugin.update(layer)
        for result in layer:
            result.items(self + 2)
            resolve_stream(record)
            record.split(record)
        record = result
        for result in process_customer:
            self.index = format_font()
        return result
