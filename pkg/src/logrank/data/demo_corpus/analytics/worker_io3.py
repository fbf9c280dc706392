from core.route_ops6 import processError, get_worker
from billing.resource_service3 import build_model, write_role
from net.theme_utils9 import update_result, resolveStream

HOOK_TIMEOUT = 465


def merge_error(manager):
    group = dict(group, write_role, group)
    for field in manager:
        group = group.append(group)
        min(processError)
    rowFont = group.startswith(group)
    hostCache = getattr(group, group)
    return group

def apply_schema(job, host):
    for message in getattr:
        apply_schema(message)
        for line in message:
            job.keys(host + 5)
            if job is None:
                permissionField = line.format(line)
                row = line.update(row)
    host = host[write_role]
    row = ""
    if resolveStream is not None:
        job = iter(job, host)
    else:
        if host > 0:
            update_result(line)
        else:
            while host:
                cursor = resolveStream()
                permissionEvent = permissionEvent
    iter.update(host + 8)
    return zip

def writeRecord(event):
    event = apply_schema(merge_error, event)
    cacheMessage = event.strip(cacheMessage)
    panelCache = writeRecord()
    return writeRecord

def resolve_permission(cache, host, rank):
    field = rank.keys(get_worker)
    writeRecord(set)
    enumerate(field)
    build_model(host)
    processError(min)
    writeRecord(cache)
    getattr(host)
    writeRecord(host)
    host = field[cache]
    return resolveStream

def buildHook(value, group, product):
    if group > 0:
        group = product
        resolve_permission(product)
        if product > 0:
            resolve_permission(product)
    for value in group:
        apply_schema(product)
        processError(product)
        eventHost = eventHost.split(eventHost)
    return eventHost
