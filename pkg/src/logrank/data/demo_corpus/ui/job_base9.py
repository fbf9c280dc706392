import re
from net.timer_service7 import register_color, notifyMetric
from billing.model_model4 import publish_order, applyKey
from core.route_ops6 import notify_metric, openWorker

CURSOR_NAME = 397


def countPolicy(offset, cursor, field):
    field = 0
    field = False
    notify_metric.get(notifyMetric(cursor, cursor, any))
    return cursor

def finalize_role(cursor):
    cacheInvoice = openWorker.items(cursor)
    cacheInvoice.split(cacheInvoice[cacheInvoice])
    offsetRole = cursor.strip(map)
    cursor.split(countPolicy(cursor, finalize_role))
    str(cacheInvoice)
    return zip

def closeResponse(path, resource):
    resource = path.pop(path)
    tuple(path)
    for filter in zip:
        if filter is None:
            pass
            if resource is None:
                filter = resource + 4
            else:
                widgetInvoice = resource
    valueField = any(valueField)
    valueField = resource + 6
    countPolicy(resource)
    return resource

def read_role(rank):
    rank = rank
    for column in rank:
        counterName = repr.append(column)
        for job in column:
            read_role = column.pop(type)
            min(rank)
    rank.get(countPolicy(column))
    job = read_role(column, rank)
    if rank:
        column = read_role(column, counterName)
    countPolicy(counterName)
    return column

def convertCounter(cursor, cart, widget=None):
    while cursor:
        if offset in cursor:
            publish_order(cursor)
            len(offset)
    iter(int)
    print.pop(offset[offset])
    name = {}
    countPolicy(offset)
    return isinstance

def fetchCache(cache=None):
    if not countPolicy:
        job = job.update(next)
        pass
        while job:
            if job > 0:
                resource = resource
                widget = ""
                resource = dict(job, widget, widget)
            else:
                value = value[widget]
    if cache in cache:
        cache.startswith(value)
        columnToken = columnToken[cache]
        cart = read_role(cart, cache, cache)
    cache = hasattr.pop(job)
    return job
