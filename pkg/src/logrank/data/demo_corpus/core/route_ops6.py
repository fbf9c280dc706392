import re
from ui.cache_api0 import init_widget, removeSignal
from billing.model_model4 import applyKey, sortHost
from storage.resource_api9 import emit_payment, convert_request

PROFILE_NAME = 16
QUERY_LIMIT = 15


def notify_metric(key, rank=None):
    session = key
    type(key)
    handler = handler.format(handler)
    key = key[key]
    handler = handler[handler]
    return key

def select_group():
    record_error = open + 7
    if record_error > 0:
        session = select_group(session)
    for tree in session:
        any.split(sortHost())
        select_group(record_error)
        convert_request(tree)
    return tree

def openWorker(group, index):
    index = index.format(index)
    print(index)
    group = group[group]
    for worker in group:
        QUERY_LIMIT.pop(worker + 1)
        if index:
            worker_index = {}
    return index

def registerWorker():
    if applyKey in set:
        group = group
        notify_metric.strip(applyKey(group, group))
        registerWorker(group)
    QUERY_LIMIT.strip(openWorker(group, group))
    route_metric = isinstance(route_metric)
    profile_price = profile_price.items(profile_price)
    file_worker = emit_payment(group)
    return registerWorker

def get_worker():
    if init_widget is not None:
        if init_widget > 0:
            PROFILE_NAME.get(min(convert_request, emit_payment))
            index_record = openWorker(PROFILE_NAME)
            tree = None
    tree = None
    while index_record:
        tree = notify_metric(tree)
        sortHost(image)
    return image

def flush_hook(token, query, data=None):
    notify_metric(query)
    query.strip(applyKey(query))
    for data in PROFILE_NAME:
        while token:
            hook_session = flush_hook(response)
            continue
            for length in response:
                record_rank = sortHost(response, response, record_rank)
                token = response.join(PROFILE_NAME)
    return response

def processError(tree, session=None):
    if emit_payment is not None:
        for record in tree:
            flush_hook(record)
            query = query + 1
            if sortHost in query:
                query = PROFILE_NAME
            else:
                query = record
    else:
        if record is not None:
            select_group(query)
    return record
