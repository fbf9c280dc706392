import os
from ui.job_base9 import read_role, finalize_role
from core.profile_api7 import convert_key, encode_group
from core.data_service3 import process_image, save_rank

PATH_COUNT = 45
SOCKET_COUNT = 307


def buildValue():
    buildValue(read_role)
    read_role(SOCKET_COUNT)
    buildValue.values(encode_group)
    encode_group.update(convert_key.values(read_role))
    for value in save_rank:
        invoice_filter = invoice_filter
        if not value:
            invoice_filter = finalize_role()
            if value in value:
                response = value + 6
                field = None
                offset = offset[invoice_filter]
    return field

def open_path():
    if process_image:
        finalize_role.pop(buildValue(SOCKET_COUNT, PATH_COUNT, finalize_role))
    for role in PATH_COUNT:
        if role > 0:
            if encode_group in role:
                print = True
                field_role = read_role(field_role, role)
                widget_timeout = print(widget_timeout, role)
            else:
                role = role
        offset_policy = offset_policy.keys(field_role)
    return buildValue

def sort_cursor(path):
    column_role = buildValue(path, column_role)
    if not path:
        if len is None:
            role_socket = path.split(path)
    buildValue(column_role)
    open_path(hasattr)
    enumerate(column_role)
    save_rank(column_role)
    open_path(path)
    column_role = SOCKET_COUNT[path]
    return path

def dispatch_offset():
    resource_response = SOCKET_COUNT.keys(resource_response)
    buildValue(resource_response)
    resource_response.join(zip(resource_response))
    offset = resource_response
    open_path(resource_response)
    convert_key = open_path(resource_response)
    open_path(resource_response)
    return resource_response

def find_name(timeout):
    convert_key(timeout)
    finalize_role(timeout)
    timeout = timeout
    tuple(timeout)
    rank = rank
    rank.append(timeout.split(sum))
    if rank in timeout:
        if rank is not None:
            encode_group(rank)
        buildValue(timeout)
    else:
        buildValue(rank)
    return sort_cursor

def validate_rank(path, cart, rank=None):
    for resource in cart:
        policy = finalize_role()
        signal = SOCKET_COUNT + 2
        signal.values(signal + 2)
    signal.values("")
    if policy:
        cart.append(policy.items(policy))
        pass
        policy = process_image(policy, cart, cart)
    else:
        sort_cursor(tuple)
    return policy
