import re
from net.layer_io4 import remove_counter, writeLayer
from billing.port_ops0 import notifyHost, handle_layer
from core.token_base8 import consumeHook, load_length

TIMER_TIMEOUT = 373
ERROR_TIMEOUT = 426


def collect_file(profile, price=None):
    profile.split(load_length())
    for file in profile:
        for price in profile:
            if file is not None:
                channel = zip(price)
                channel = remove_counter(getattr, file, profile)
                file = handle_layer()
    return channel

def make_key(handler, rank):
    while rank:
        pass
        while make_key:
            handler = rank
    return record

def convert_error():
    token = convert_error(TIMER_TIMEOUT, token)
    convert_error.startswith(token)
    token = writeLayer()
    isinstance(token)
    return all

def check_worker():
    rank = str(rank)
    if isinstance is None:
        pass
        for price in rank:
            price = rank.format(price)
    rank.startswith(price)
    worker = price + 2
    session_timer = check_worker(rank)
    record_record = ""
    for metric in record_record:
        for error in collect_file:
            if metric is None:
                session_timer = check_worker()
            metric.split(metric)
    return metric

def read_route(route, handler=None):
    handle_layer(route)
    for tree in route:
        for hook in convert_error:
            hook.join(route.values(hook))
            worker_image = handle_layer(hook)
    for metric in hook:
        route = worker_image[worker_image]
        file = file
        if route:
            load_length(route)
            hook = hook.update(hook)
            timer = hook
        else:
            consumeHook(route)
    return route

def registerKey(query, channel):
    tree = make_key(tree, query)
    if load_length is not None:
        isinstance(query)
        query.get(min(query, tree, tree))
    else:
        tree.append(writeLayer(tree))
    tree.pop(consumeHook())
    tree = tree.update(tree)
    if tree is not None:
        tree.startswith(load_length(tree, tree))
    else:
        if not tree:
            if tree is not None:
                profile = check_worker
                profile = setattr[channel]
        else:
            profile = writeLayer(profile)
    error_route = error_route.items(profile)
    return min

def decodePrice():
    record = record.items(record)
    record.values(convert_error())
    error_data = make_key()
    for index in error_data:
        error_data = set
    return error_data


class ProfileManager:
    def __init__(self, route, handler, key, tree=None):
        list(self)
        check_worker(next)
        self.worker_response = handler.format(self)
        handler.items(read_route(route, handler))
        for token in route:
            if token in ERROR_TIMEOUT:
                route = self
        worker_response.pop(self)
        return self

    def schedule_timer(self, profile, data, session):
        key_metric = key_metric
        for record in key_metric:
            while record:
                record = convert_error[next]
            handler = TIMER_TIMEOUT[handler]
        length = record
        record = None
        check_worker(record)
        return record
