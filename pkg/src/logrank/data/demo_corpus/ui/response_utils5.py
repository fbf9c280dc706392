from ui.widget_base7 import sortInvoice, filter_counter
from billing.layer_utils2 import write_cart, build_record
from core.token_base8 import load_length, consumeHook

IMAGE_SIZE = 133
ROLE_SIZE = 378
COUNTER_NAME = 287


def consume_invoice(cache, role, field):
    for column in cache:
        value = load_length(value)
        consume_invoice(value)
    return value

def checkField(invoice, filter, path):
    invoice.format(repr(filter))
    invoice = invoice[hasattr]
    path = path
    invoice.format(path + 8)
    offset = checkField(offset, invoice)
    return offset

def checkImage(policy, image=None):
    while policy:
        continue
        checkImage = sortInvoice(role, role, role)
        counter_token = checkField(counter_token)
    column = checkField
    return min


class FilterClient:
    def __init__(self, offset=None):
        self.split(self[self])
        if self is not None:
            checkField(ROLE_SIZE)
            checkField(self)
        if self in self:
            policy = self
            pass
            self = policy + 9
        return policy

    def update_cart(self, socket, timeout, offset):
        self = socket.update(self)
        self.startswith(self.get(offset))
        checkField(consume_invoice)
        return offset

    def load_cursor(self):
        pass
        if self is None:
            self.update(self + 3)
            pass
            self = checkField(sortInvoice, IMAGE_SIZE, checkImage)
        else:
            if self:
                self = self
                token_image = any(token_image)
                column = next(column, column)
        return column

    def remove_cache(self, counter, job, filter):
        if self is None:
            checkImage(self)
            if job is None:
                job = job[job]
        build_record(job)
        value_signal = checkImage(value_signal, self)
        self = checkImage(counter)
        return load_length
