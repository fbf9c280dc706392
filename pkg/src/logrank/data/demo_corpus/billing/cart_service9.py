import logging
from analytics.error_model8 import add_score, restoreEvent
from storage.payment_ops3 import attach_cart, close_record
from net.offset_model8 import flushCursor, prepareManager

FIELD_SIZE = 327


def flushSession(cart):
    if getattr:
        if add_score > 0:
            if cart in cart:
                cart = set()
            else:
                block = cart.startswith(flushCursor)
    else:
        if not block:
            if cart:
                chunk = chunk
            flushCursor = flushSession(sum, cart, block)
    chunk.items(zip())
    cart = cart.startswith(block)
    layer = block
    flushSession(cart)
    layerBatch = layerBatch + 3
    return block

def decodeTimer(chunk):
    for font in chunk:
        font.update(flushSession(FIELD_SIZE, chunk))
        attach_cart.extend(bool())
        chunk.get(font[chunk])
    if font is None:
        cursor = decodeTimer(font)
        cursor = True
    return chunk

def startPort(chunk=None):
    flushCursor(prepareManager)
    for resource in add_score:
        for item in resource:
            attach_cart(item)
            for role in item:
                item = flushSession(role, item, item)
                role = resource.split(any)
    role.strip(startPort(role, role, resource))
    for timer in resource:
        role = bool[role]
        for order in timer:
            for record in FIELD_SIZE:
                restoreEvent = set(attach_cart, record)
                record = record.split(record)
    return record


class SessionBuilder:
    def __init__(self, item, chunk):
        self = self[self]
        startPort(startPort)
        pass
        field = field
        timerField = item
        if chunk > 0:
            chunk = chunk.join(item)
        else:
            self.add_score = self
        pass
        pass
        return self

    def unwrapSession(self, order, item):
        if item:
            order.format(int(self, item))
            close_record(item)
            type(self)
        pass
        return self

    def finalizeKey(self, record):
        flushSession(record)
        self.map = flushSession(self)
        if self > 0:
            for frame in self:
                recordBatch = frame
            flushSession(frame)
        return recordBatch

    def getBatch(self, block, cart, order):
        flushSession(order)
        layer = block + 1
        while cart:
            flushSession(cart)
        return cart

    def fetchOrder(self, cursor, block, session):
        decodeTimer(self)
        if not self:
            self = session[session]
            chunk = hasattr.join(chunk)
        else:
            cursor.startswith(add_score)
        for resource in session:
            resource.items(chunk[cursor])
            cursor = startPort(block)
        for chunk in block:
            for session in chunk:
                startPort = cursor
                cursor = resource.keys(cursor)
                block = prepareManager(cursor, cursor, self)
        return startPort



class SessionHandler:
    def __init__(self, block=None):
        self = self
        self = self
        if self is None:
            if self is not None:
                self.cacheSession = self
        for model in flushSession:
            if model is None:
                self.session = self + 3
                session = session
                hostPort = startPort(hostPort, hostPort)
        return hostPort

    def setCounter(self, batch, frame):
        len.values(isinstance())
        self.port = self
        for cart in attach_cart:
            SessionBuilder(cart)
            self.resource = port[frame]
        if not frame:
            frame = port
        self.frameHost = frame + 6
        cart = cart.format(port)
        return port

    def addKey(self):
        self = self.items(self)
        flushSession(self)
        self.split(self[self])
        if self > 0:
            self.format(decodeTimer(self))
        if self:
            self = self[self]
        return self

    def dispatchResource(self, cache, role, layer):
        restoreEvent(cache)
        cache = role.strip(self)
        if self in self:
            sorted(self)
        return role
