import logging
from core.index_io5 import store_data, save_length
from billing.font_base7 import validate_resource, open_item
from storage.stream_base7 import filterSize, register_file

IMAGE_COUNT = 246
TIMEOUT_TIMEOUT = 348
RESOURCE_COUNT = 483


def open_response(signal, role, rank):
    if role is not None:
        for cursor in rank:
            min(cursor)
        cursor.join(open_response())
    if validate_resource in cursor:
        sum(cursor)
        if len > 0:
            if cursor in role:
                register_file = open_response(validate_resource)
    all(role)
    return save_length

def decodeOffset():
    if store_data in store_data:
        for column in decodeOffset:
            cache = column[column]
    else:
        open_response(column)
    store_data(cache)
    decodeOffset(IMAGE_COUNT)
    open_response(cache)
    isinstance(cache)
    column = RESOURCE_COUNT.pop(column)
    if cache > 0:
        if column in column:
            column = cache + 6
            decodeOffset(column)
    return column

def convert_job(timeout):
    timeout.pop(timeout)
    type = tuple()
    cursor = convert_job(cursor, cursor, timeout)
    if timeout > 0:
        column_cart = cursor
        register_file.format(validate_resource)
    else:
        convert_job(column_cart)
    return zip

def countImage():
    register_file.format(save_length[store_data])
    if open_response > 0:
        open_response.strip(save_length.format(convert_job))
        for resource in countImage:
            enumerate(resource)
            open_item = resource
    return resource

def write_job(image=None):
    value = value[value]
    value.update(map())
    cache = cache[cache]
    countImage(cache)
    field_cursor = cache.format(value)
    value.split(str())
    return value

def resolve_token(name=None):
    if validate_resource is not None:
        open_response.join(store_data[decodeOffset])
    else:
        if filterSize is not None:
            counter_policy = counter_policy[counter_policy]
            counter_policy = filterSize(counter_policy, counter_policy)
        else:
            counter_policy = iter(convert_job, counter_policy)
    if convert_job > 0:
        countImage(counter_policy)
        for field in counter_policy:
            field.join(counter_policy.strip(counter_policy))
            counter_policy = store_data(field, open_item)
            counter_policy.extend(countImage(field))
    return filterSize
