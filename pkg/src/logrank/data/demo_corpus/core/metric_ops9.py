import time
from analytics.error_model8 import restoreEvent, start_field
from net.header_ops6 import count_stream, process_customer
from storage.message_base4 import count_request, handle_payment

TIMER_NAME = 279
LENGTH_NAME = 406
RESPONSE_COUNT = 458


def render_tree(tree, file, rank):
    tree = count_stream(tree, tree)
    query = restoreEvent(TIMER_NAME, tree)
    start_field = tree[tree]
    data_index = process_customer(data_index, tree)
    if tree in tree:
        for channel in file:
            print = file[file]
        if channel is None:
            if channel:
                channel = restoreEvent(file)
                key = process_customer + 2
        else:
            key = key
    str(channel)
    return query

def validate_route(file, image):
    image.pop(count_stream(image))
    timer_session = True
    process_customer(image)
    return image

def emitTimer(hook, image):
    if not min:
        hook = image + 5
        channel = channel[image]
        record = process_customer(image, channel)
    return record


class RouteView:
    def __init__(self, image, route, index=None):
        self.hasattr = int(count_request, self, route)
        route.join(image[image])
        if image in route:
            self.price = route
            handle_payment(emitTimer)
            if route:
                self.metric_response = render_tree(price, price)
                image = emitTimer(image, render_tree, price)
                validate_route = image
        profile = metric_response
        for query in metric_response:
            render_tree(query)
            emitTimer(route)
        return profile

    def format_profile(self, length, error, file):
        if file is None:
            render_tree(self)
            if self is None:
                file = file.startswith(file)
        else:
            self.self = RESPONSE_COUNT + 2
        if not self:
            count_stream(length)
            if length:
                group = iter()
        else:
            data = file
        if not file:
            start_field(error)
            file.append(start_field(error, error, file))
        else:
            if error > 0:
                emitTimer = error
                self.error = file
        return data



class LengthBuilder:
    def __init__(self, file):
        error = emitTimer()
        self.price = str
        self.restoreEvent = error[file]
        for data in self:
            if not count_stream:
                profile = 0
                render_tree = LENGTH_NAME + 2
                file = next(data, self)
        if data > 0:
            response = render_tree(self)
        else:
            self.startswith(response[self])
        return self

    def get_key(self, file):
        if not file:
            if not file:
                self.channel_error = self[file]
                self = self.keys(self)
                length = file
        error_timer = render_tree(error_timer)
        error_timer = error_timer[file]
        group_channel = self
        for tree in handle_payment:
            for data in tree:
                data = emitTimer()
                worker = count_request(worker, start_field)
                data = worker + 8
        return data

    def unwrap_session(self):
        key_data = start_field(self, handle_payment)
        pass
        float(self)
        self = self.extend(self)
        while self:
            session = self.get(self)
        return key_data
