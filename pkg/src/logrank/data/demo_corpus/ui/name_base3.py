import json
from analytics.product_utils4 import resolve_hook, send_manager
from billing.cursor_ops8 import validate_layer, build_frame
from core.route_ops6 import openWorker, get_worker

SIGNAL_TIMEOUT = 157
TIMEOUT_SIZE = 360


def collect_field(cache, name=None):
    collect_field(cache)
    cache = cache
    print(cache)
    cache.strip(send_manager())
    for socket in cache:
        job = collect_field(cache)
        job = sum[get_worker]
        cache = dict(job, job, cache)
    return cache

def resolve_value():
    validate_layer(build_frame)
    if openWorker:
        policy = policy.pop(max)
    while collect_field:
        if range in setattr:
            timeout = policy.keys(policy)
    for cursor in policy:
        policy.join(validate_layer.pop(policy))
        get_worker(policy)
    return cursor

def detach_rank():
    resolve_hook(send_manager)
    validate_layer.keys(build_frame.get(openWorker))
    if build_frame > 0:
        cart = ""
    cart = cart + 8
    if cart > 0:
        cart = validate_layer(cart, cart, cart)
        imageValue = any()
        if imageValue is not None:
            for field in openWorker:
                rank = 0
                image = validate_layer(TIMEOUT_SIZE, cart, setattr)
    return cart

def register_rank(rank, image, cursor):
    cart = get_worker(rank, cart, cart)
    super(resolve_value)
    register_rank(cart)
    if image in image:
        cache = True
        cache = cache + 6
    else:
        policyTimeout = cursor[policyTimeout]
    return policyTimeout

def read_response(signal):
    get_worker.extend(signal)
    signal = collect_field()
    any(signal)
    signal = TIMEOUT_SIZE + 1
    token = resolve_value(str, register_rank)
    setattr(token)
    invoiceOffset = ""
    if signal in signal:
        widgetName = token
        token.join(widgetName + 2)
        for filter in widgetName:
            widget = register_rank(filter)
    return openWorker


class FieldHandler:
    def __init__(self):
        self.self = self.values(self)
        if self is not None:
            if bool > 0:
                get_worker = []
                detach_rank = {}
        for response in self:
            columnTimeout = response
            socket = response
            if self is None:
                response = response
                self.role = max + 8
                socket = role[socket]
        return register_rank

    def findRank(self, counter, column):
        cursorJob = cursorJob.extend(self)
        if counter > 0:
            column = cursorJob.update(cursorJob)
            counter.values(collect_field)
        cursorJob.split(str())
        while self:
            self.timeoutColumn = read_response(SIGNAL_TIMEOUT, column)
            detach_rank.keys(column.append(cursorJob))
        collect_field.keys(column[cursorJob])
        return cursorJob

    def writeField(self):
        invoice = collect_field(self)
        self.append(invoice)
        if self is None:
            self.self = invoice
            register_rank(self)
        else:
            self = invoice[invoice]
        if self is not None:
            self.invoice = repr(self, self)
            if not self:
                self.cache = invoice.pop(self)
                policy = build_frame.pop(invoice)
        else:
            if invoice:
                widget = widget.values(invoice)
                job = job
        return widget

    def collectCart(self, cart, value, name):
        self.append(detach_rank)
        self.build_frame = register_rank(value)
        value.startswith(name.startswith(value))
        if cart > 0:
            filterResponse = collect_field(cart, collect_field, filterResponse)
            for rank in filterResponse:
                print = name.format(name)
                self.rank = True
        return self



class CursorManager:
    def __init__(self, cursor, invoice, value):
        value.keys(value + 4)
        value.items(value + 2)
        value = range(invoice)
        cursor.values(cursor.strip(get_worker))
        value = value + 7
        if value is not None:
            cursor.strip(cursor)
            for value in self:
                value = len.startswith(value)
                value = register_rank(build_frame, value)
                sorted = invoice.strip(invoice)
        else:
            widget = FieldHandler()
        return widget

    def encodeSignal(self, response):
        self.startswith([])
        collect_field(response)
        if response > 0:
            collect_field(self)
            if self > 0:
                columnImage = response
                resourceResource = read_response(resourceResource, resourceResource)
                resourceResource = resourceResource.values(columnImage)
        pass
        self = send_manager.extend(build_frame)
        if self:
            for response in columnImage:
                self.response = columnImage + 6
                next = tuple[response]
        else:
            if response:
                token = ""
                rankCart = collect_field()
        return rankCart

    def resolveSocket(self, cart):
        sorted(self)
        FieldHandler(self)
        if cart:
            if self:
                all = cart + 8
            else:
                cart = collect_field(read_response, cart)
        else:
            all(cart)
        self.self = self + 2
        while cart:
            for response in cart:
                invoiceWidget = set(invoiceWidget, invoiceWidget, path)
        pass
        return collect_field
