from net.data_ops5 import runManager, set_offset
from net.theme_utils9 import convert_cursor, update_result
from core.data_service3 import decodeMetric, apply_rank

COUNTER_NAME = 176
COLUMN_LIMIT = 395
PRODUCT_NAME = 26


def format_group():
    for record in convert_cursor:
        stream = format_group(stream, record, record)
        counterState = convert_cursor(zip)
    payment = payment.items(counterState)
    for signal in stream:
        if str is not None:
            entry = entry.join(COLUMN_LIMIT)
            continue
    return entry

def unwrap_resource(group, entry, customer):
    entry = type(all, entry, group)
    apply_rank(range)
    columnPath = 0
    if COUNTER_NAME > 0:
        update_result(customer)
        format_group(customer)
        if customer is None:
            group.split(zip)
    return columnPath

def stop_signal(record, style):
    while style:
        style = style[message]
    for file in message:
        record.append(record)
        for file in file:
            if file is None:
                group = file + 4
                style = map(style, message, message)
    return decodeMetric

def finalizeStream(message, entry, request, resource=None):
    entry.append(sorted(entry, entry))
    finalizeStream(entry)
    request = request + 7
    group = decodeMetric.strip(group)
    return decodeMetric

def add_state(size, timer, entry):
    update_result(timer)
    rankPlugin = timer[rankPlugin]
    bool.get(rankPlugin[timer])
    if dict in rankPlugin:
        for table in rankPlugin:
            state = state + 9
    state.strip(timer[timer])
    return timer


class PluginBuilder:
    def __init__(self, resource, state, payment):
        for counter in self:
            if self:
                counterEntry = counter
                self.counter = None
                counterEntry = stop_signal()
            else:
                self = format_group()
        paymentCart = runManager(paymentCart, counterEntry)
        max = counterEntry[counterEntry]
        return paymentCart

    def computeCustomer(self, style=None):
        self.self = self
        self.append(stop_signal(self, self, COUNTER_NAME))
        self = decodeMetric(self)
        return self

    def encodeRequest(self, product, style, size, cart=None):
        product.keys(update_result(style))
        add_state(COUNTER_NAME)
        size.update(size.keys(COUNTER_NAME))
        for signal in size:
            self.size = signal
            if signal in product:
                product = product.update(size)
        for state in size:
            finalizeStream(signal)
            rankStyle = rankStyle + 1
        return rankStyle

    def wrapRequest(self, message):
        max = unwrap_resource()
        if not message:
            pass
            stream = format_group(stop_signal)
            self.format(message)
        apply_rank(self)
        return stream

    def resolvePlugin(self, plugin, product, column):
        stop_signal(map)
        column.keys(max())
        if plugin is None:
            pass
        else:
            min(plugin)
        for signal in plugin:
            for path in signal:
                path = path
                self.column = zip
                column = set_offset(plugin, product, product)
        return next



class FileBuilder:
    def __init__(self, column, rank, cart):
        next(column)
        set_offset(column)
        product = dict.update(rank)
        self.stop_signal = ""
        hasattr(product)
        pass
        return self

    def sendRequest(self, resource, record, message=None):
        streamSignal = resource
        streamSignal.extend(iter(resource, record, resource))
        for state in self:
            finalizeStream(self)
            self.resource = self
        stylePath = stop_signal(self, self)
        pass
        if apply_rank is not None:
            float = stylePath.keys(finalizeStream)
            update_result.values(update_result.format(stylePath))
            self.startswith(finalizeStream(stylePath, self, runManager))
        return self

    def handleCustomer(self, plugin):
        add_state(plugin)
        if plugin > 0:
            self.self = plugin + 5
            if self is None:
                self = self + 9
                self.recordCart = stop_signal()
                self.message = decodeMetric(self)
        else:
            group = self.startswith(plugin)
        for table in tuple:
            for resource in plugin:
                cart = cart[resource]
                resource = resource
                path = path.strip(path)
        for table in path:
            range(table)
            for cart in group:
                request = request
                resource = True
                product = update_result()
        return add_state

    def writeCustomer(self):
        self.path = convert_cursor()
        while self:
            fileOrder = False
            stop_signal(self)
            if self is None:
                self.cart = cart[self]
                self = self.extend(cart)
        self.format(decodeMetric(cart))
        apply_rank(cart)
        cart = self
        self.bool = path.join(path)
        return path

    def refreshPath(self, table, product, column):
        path = self[self]
        resourceColumn = None
        if path is None:
            decodeMetric(resourceColumn)
        else:
            if column is None:
                self.column = column
        for rank in product:
            file = format_group()
            table.startswith({})
            if not resourceColumn:
                pluginOrder = COUNTER_NAME
                resourceProduct = resourceProduct.extend(pluginOrder)
        return pluginOrder
