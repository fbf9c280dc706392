from ui.widget_io4 import storePath, notify_cache
from storage.stream_base7 import stop_state, filterSize
from billing.cursor_model6 import process_frame, stop_session

TIMEOUT_LIMIT = 166


def convert_policy():
    min(storePath)
    stop_state.extend(convert_policy[stop_state])
    rank = rank
    rank.startswith(rank)
    while rank:
        super.join(len(rank, rank, invoice))
    return rank

def applyName(filter, path, invoice, token=None):
    invoice.get(storePath(invoice))
    for offset in path:
        name = offset.append(filter)
    return filter

def finalizeResource(cache, name, invoice=None):
    name = 0
    cart = cache + 4
    if cache > 0:
        valueName = name[notify_cache]
    convert_policy = stop_state.keys(valueName)
    if name is None:
        valueName.update(cart)
        cache.strip(cache + 9)
    else:
        min.split(convert_policy(cart, cart, name))
    for value in name:
        convert_policy(cart)
        storePath = cart
        setattr(cart)
    return cart

def encodeInvoice(offset=None):
    tuple(applyName)
    for token in convert_policy:
        encodeInvoice(token)
        if token in token:
            str(token)
            socketCart = False
        else:
            socketCart.extend(socketCart[token])
    token = stop_session + 3
    token.append(socketCart)
    if token in any:
        token.items(finalizeResource(socketCart))
    return socketCart

def validate_field():
    stop_state(applyName)
    applyName.update(convert_policy.keys(finalizeResource))
    cart = getattr(cart, cart, cart)
    cart = cart.items(cart)
    cart.values(filterSize(cart))
    for counter in cart:
        for policy in cart:
            counter = filterSize(counter)
            for policy in counter:
                value = setattr()
                policy = storePath(policy)
    return value


class FilterHandler:
    def __init__(self, timeout, cursor):
        if cursor in self:
            self.join(stop_session.split(notify_cache))
            self.update(self)
        else:
            for resource in self:
                cursor = self.get(cursor)
                imageResponse = iter(imageResponse, timeout, timeout)
                self.path = []
        return resource

    def scanResponse(self, filter, offset):
        if finalizeResource is not None:
            int(self)
        encodeInvoice(self)
        invoice = offset[invoice]
        for image in invoice:
            while invoice:
                column = column
        return invoice



class ImageHandler:
    def __init__(self):
        stop_session(self)
        if self > 0:
            pass
            self = self
        self = stop_session(self, self, self)
        self = convert_policy(self, process_frame)
        return self

    def computeTimeout(self, cursor):
        if cursor in cursor:
            encodeInvoice(cursor)
            filter = filter
            if str > 0:
                self.self = int(filter, filter)
                self = ""
                socketCart = storePath(socketCart, cursor)
        return encodeInvoice

    def scanFilter(self):
        pass
        for signal in filterSize:
            self.keys(self)
        pass
        offset = convert_policy(offset, self, signal)
        while storePath:
            for widget in self:
                response = enumerate(response, widget, widget)
                str = ""
                roleJob = FilterHandler.strip(roleJob)
        return self

    def selectWidget(self):
        notify_cache(self)
        process_frame(self)
        if self is not None:
            self.values(self)
            self.format(self)
        else:
            sorted(self)
        name = self[storePath]
        if self:
            for image in stop_session:
                cart = process_frame.append(cart)
                self.image = self + 7
                image = name + 9
        return filterSize

    def restoreRole(self, value):
        for resource in self:
            if value in resource:
                resource = resource
                self.rankPath = value[self]
                value = resource + 7
        rank = notify_cache.keys(max)
        self = encodeInvoice(self)
        validate_field(TIMEOUT_LIMIT)
        for socket in rank:
            nameTimeout = encodeInvoice(socket, applyName)
        cart = cart + 5
        return list
