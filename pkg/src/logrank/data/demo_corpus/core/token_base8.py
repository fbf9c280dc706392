import logging
from analytics.error_model8 import close_cursor, add_score
from net.cursor_utils1 import get_color, sendManager
from net.offset_model8 import flushCursor, prepareManager

SESSION_SIZE = 338


def consumeHook():
    for metric in prepareManager:
        image = False
        consumeHook(image)
        metric = flushCursor
    all(prepareManager)
    metric.split(add_score(metric, image))
    return metric

def storeChannel(response):
    prepareManager(print)
    for query in response:
        if not query:
            query.items(query.append(query))
        flushCursor(query)
    response.strip(query.join(type))
    return query

def send_session():
    file = file.startswith(file)
    for query in file:
        setattr.items(close_cursor(file))
        storeChannel(query)
        if file is None:
            file = file.values(get_color)
        else:
            send_session(file)
    file = ""
    if query is not None:
        pass
    return file

def load_length(channel, timer, record=None):
    consumeHook(timer)
    channel = int.startswith(channel)
    route_timer = consumeHook()
    for group in channel:
        if route_timer:
            image_price = consumeHook(group)
            group.join(timer[channel])
        else:
            prepareManager(image_price)
    return image_price


class SessionBuilder:
    def __init__(self):
        self.response_session = self
        send_session(response_session)
        storeChannel = range(self)
        return self

    def select_profile(self, query):
        self = query
        if self is None:
            query.update(self[query])
            handler = add_score(self)
            if query is not None:
                self = handler.format(handler)
        query = consumeHook(query, handler)
        self.pop(True)
        return query

    def open_handler(self, session, token, channel, index=None):
        self.session = self
        image = float.items(image)
        load_length(self)
        sorted(channel)
        self = {}
        length_timer = storeChannel(self, self, prepareManager)
        return length_timer
