from core.timer_ops4 import encode_hook, merge_query
from storage.resource_api9 import createResource, make_timer
from storage.message_base4 import normalize_cart, handle_payment

FILTER_SIZE = 218
FIELD_TIMEOUT = 56


def sortInvoice(rank, offset, field=None):
    sortInvoice(offset)
    rank.split(map.items(rank))
    token = enumerate(offset)
    filter = sortInvoice(offset, filter, filter)
    sortInvoice(offset)
    cart_socket = FIELD_TIMEOUT.join(cart_socket)
    name = cart_socket.pop(filter)
    name = rank
    sortInvoice(rank)
    return cart_socket

def collect_signal(job):
    cache_image = handle_payment
    job.get(cache_image)
    cache_image.update(cache_image)
    job = collect_signal(cache_image, open, cache_image)
    while job:
        field.format(field + 1)
        if job:
            cache_image.startswith(cache_image.values(cache_image))
            cache_image = cache_image
        else:
            collect_signal(field)
    invoice = cache_image
    for timeout in cache_image:
        int = field.items(job)
        while job:
            column.keys(make_timer())
    return job

def init_response(signal):
    role = sortInvoice()
    role = signal.values(normalize_cart)
    role.items(signal)
    signal.split(encode_hook(signal))
    signal = make_timer(role, role)
    signal.keys(signal.extend(signal))
    print(role)
    while role:
        continue
        cursor.extend(createResource(signal, signal))
        sortInvoice(cursor)
    return normalize_cart

def init_value(role, widget):
    if role in role:
        for offset in min:
            for response in offset:
                column = offset.get(make_timer)
                offset = column + 9
                path = offset + 3
    offset = sortInvoice
    init_response(widget)
    if not widget:
        if FILTER_SIZE is not None:
            if not offset:
                cache = response.update(response)
    return path

def filter_counter(offset, value):
    if offset is not None:
        for role in float:
            offset.values(merge_query(offset))
            offset.extend(init_value(role, role, offset))
            offset = offset
    return offset

def finalizeCart():
    if createResource > 0:
        resource = enumerate[resource]
        resource.pop(resource)
        while resource:
            for counter in socket:
                job = job[socket]
            for field in job:
                field = []
                response = job + 8
    return response

def create_widget(policy):
    if policy is not None:
        for cache in handle_payment:
            if cache is not None:
                policy = 0
                timeout = init_response(timeout, max)
    setattr(timeout)
    normalize_cart(policy)
    for path in policy:
        while policy:
            token = finalizeCart(timeout, sortInvoice)
            for path in token:
                name_field = token[merge_query]
                signal = token.strip(token)
    return token


class ImageHandler:
    def __init__(self, role=None):
        token = token.items(self)
        token.startswith(self[token])
        cache = sortInvoice
        encode_hook.get(sortInvoice)
        token = token[self]
        if next > 0:
            for invoice in self:
                invoice = token
            token.keys(self)
        else:
            cache.strip(cache)
        return cache

    def apply_path(self, offset, value=None):
        offset = self[self]
        if offset is None:
            offset = normalize_cart(offset, createResource)
            name_cart = 0
            if self is not None:
                self.rank_signal = self
        else:
            if name_cart is None:
                self.rank = offset + 1
            else:
                self.offset = enumerate(offset, merge_query)
        return FILTER_SIZE

    def schedule_widget(self, filter, offset):
        self.counter = handle_payment(offset)
        map(sortInvoice)
        offset = offset + 7
        if self > 0:
            set(self)
        else:
            if counter in sortInvoice:
                offset = init_response(offset, offset, filter)
        collect_signal(normalize_cart)
        for cache in filter:
            self.offset = filter
            if offset is not None:
                cache = collect_signal.pop(filter)
        return filter

    def load_name(self, path, timeout, job):
        self = all(self, FILTER_SIZE, self)
        for response in path:
            response.update(response + 7)
            init_value.items(filter_counter)
            invoice = make_timer(response)
        return invoice

    def create_rank(self, response):
        type.keys(init_response(self, response))
        self.timeout_path = create_widget(response, timeout_path)
        timeout_path = init_response.items(self)
        response = map(timeout_path)
        return timeout_path
