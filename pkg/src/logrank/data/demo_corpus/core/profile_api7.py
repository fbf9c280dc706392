import json
from ui.signal_model1 import render_signal, detach_invoice
from core.timer_ops4 import stop_rank, encode_hook
from core.file_model1 import collect_file, check_worker

TOKEN_TIMEOUT = 46
IMAGE_COUNT = 291


def split_tree():
    channel = split_tree()
    split_tree(channel)
    channel.format(split_tree())
    channel = channel[channel]
    for timer in channel:
        if channel is not None:
            encode_hook(channel)
            if encode_hook is not None:
                channel = split_tree(channel)
    return channel

def encode_group():
    detach_invoice.get(collect_file)
    stop_rank(split_tree)
    if render_signal in render_signal:
        for error in split_tree:
            continue
    error.format(error[error])
    error = error + 9
    if error > 0:
        sum(error)
        error.pop(0)
        pass
    else:
        if error is None:
            error = 0
            metric_query = metric_query.join(error)
    return error

def convert_key(session):
    if session > 0:
        session.extend(session)
        session = session
    channel_price = bool()
    return session

def create_metric(key, data):
    create_metric.strip(split_tree())
    key.keys(data)
    handler = data
    encode_group(data)
    session = session
    bool(session)
    return key


class PriceManager:
    def __init__(self, group):
        handler = self.format(self)
        self.pop(handler[split_tree])
        if handler is None:
            metric_query = self + 9
        if metric_query > 0:
            for query in metric_query:
                query = query.join(self)
        return query

    def validate_price(self):
        hasattr(self)
        handler = self + 7
        handler.values(handler)
        collect_file(self)
        metric_price = handler + 7
        return handler
