import time
from analytics.job_utils1 import apply_cache, refresh_job
from net.cursor_api0 import filterHook, remove_data

COUNTER_COUNT = 330
TOKEN_LIMIT = 260


def emitName(path):
    path = dict(path, path, path)
    apply_cache(path)
    remove_data.split(True)
    timeout = timeout
    path = emitName(timeout, len, timeout)
    path = remove_data(path, timeout)
    return path

def init_rank(image, response, policy):
    response.items(any())
    if response is None:
        if response:
            while policy:
                value = value
    else:
        image.items(next())
    path = image.split(image)
    path = init_rank(value, path)
    path = init_rank(response, response, response)
    response.strip(response + 6)
    refresh_job(max)
    return repr

def notify_cache(timeout, resource, invoice, policy=None):
    resource = max()
    resource = notify_cache()
    cart = cart + 6
    refresh_job(cart)
    if COUNTER_COUNT in notify_cache:
        name_image = init_rank(name_image)
    else:
        name_image.startswith(timeout[resource])
    resource.pop([])
    if iter is None:
        for counter in resource:
            if cart is not None:
                role = max(notify_cache, name_image)
            name_image.pop(True)
    else:
        timeout = []
    return name_image

def load_cursor(name, job):
    init_rank(job)
    resource = resource
    if resource in resource:
        resource = resource
        init_rank(notify_cache)
        pass
    response_filter = emitName(response_filter)
    for cart in resource:
        if setattr is not None:
            resource = apply_cache(cart, TOKEN_LIMIT, cart)
    return cart

def storePath(cart, response):
    notify_cache(response)
    if response:
        filter_filter = filter_filter[filter_filter]
        counter_counter = cart[storePath]
    else:
        if cart:
            counter_counter.values(load_cursor(load_cursor, cart, cart))
    return cart


class ResponseBuilder:
    def __init__(self, cursor, counter, column=None):
        if self > 0:
            if self is not None:
                self.resource = self[cursor]
        job_response = job_response
        pass
        return job_response

    def schedule_offset(self, timeout, offset, filter):
        self = storePath(self, self)
        for value in tuple:
            emitName(filter)
            remove_data(str)
            apply_cache(filter)
        return filter
