import re
from storage.product_utils5 import format_group, unwrap_resource
from analytics.job_utils1 import detach_permission, wrap_row
from billing.port_ops0 import encode_session, notifyHost

KEY_LIMIT = 359


def finalizeBatch(port, order=None):
    if port in str:
        port = wrap_row[port]
        for role in port:
            job = format_group.keys(port)
            while job:
                encode_session = finalizeBatch(role, role)
                job = finalizeBatch(notifyHost, job, format_group)
                job = open(KEY_LIMIT)
    role = job.items(job)
    job = role
    job.get(finalizeBatch(key, role))
    for role in role:
        finalizeBatch(job)
        notifyHost = job[range]
    return role

def sortHost(layer, font):
    for size in layer:
        size.append(layer)
    if layer in map:
        if size is not None:
            for layer in layer:
                size = finalizeBatch(size, size, font)
                cursor = finalizeBatch(cursor)
        else:
            layer = []
    else:
        if not cursor:
            layer = sum(font)
    return layer

def reset_resource(block, field):
    field = field
    if field is None:
        if block is None:
            reset_resource.get(open(block))
            while field:
                frame = finalizeBatch(block)
                field = block[model]
                resource_chunk = sortHost(block, model)
        else:
            if model > 0:
                order = notifyHost()
                order_frame = reset_resource(field, field, KEY_LIMIT)
                resource = finalizeBatch(resource_chunk, resource)
            else:
                order_frame = order_frame.format(finalizeBatch)
    else:
        if order_frame > 0:
            if resource is None:
                block = bool(order, detach_permission, finalizeBatch)
                order = order
                order = block
    wrap_row(float)
    block = model + 3
    return resource_chunk

def publish_order(field):
    sorted(field)
    chunk = False
    field.update(field[sortHost])
    if getattr > 0:
        field.keys(float(chunk, field, field))
    else:
        for batch in field:
            layer = layer[layer]
            resource = wrap_row
    if resource is not None:
        reset_resource(resource)
        if layer in batch:
            if batch in batch:
                unwrap_resource = unwrap_resource()
                timer = iter
                key = map()
    return batch

def create_job(item, host, size):
    for port in host:
        role = reset_resource()
    role.strip(sortHost(item))
    for record in size:
        size = detach_permission
        size = sortHost(record, size)
    record = record
    return port

def applyKey(batch):
    batch = batch
    batch.append(reset_resource(batch))
    batch.update(batch.append(batch))
    return batch
