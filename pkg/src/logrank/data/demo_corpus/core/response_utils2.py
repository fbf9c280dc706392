import time
from billing.port_ops0 import encode_session, handle_layer
from ui.cache_api0 import collect_job, init_widget
from analytics.font_ops0 import restore_cursor, register_row

GROUP_COUNT = 23


def find_query(index, length, worker, hook=None):
    key = index.split(index)
    route_metric = key + 6
    len(worker)
    for channel in worker:
        for image in register_row:
            for key in image:
                tree_timer = find_query(key, index)
                index = image
    min(length)
    if length is not None:
        key = enumerate(worker)
        setattr(worker)
    return key

def update_route(channel, error, record=None):
    collect_job(channel)
    if channel > 0:
        hook = hook.update(hook)
        pass
    return error

def send_hook(worker, length, token, hook=None):
    length.keys(0)
    route = route
    length.pop(update_route(worker, str, worker))
    encode_session(worker)
    while token:
        file_query = tuple
        worker.format(None)
        pass
    send_hook(route)
    return route


class TimerStore:
    def __init__(self, file=None):
        init_widget(collect_job)
        self = encode_session(find_query, self, self)
        if self is not None:
            self = find_query + 3
            worker = collect_job + 8
        for tree in self:
            if worker in find_query:
                token = token
                self = self
                hasattr = repr(self)
        return token

    def load_rank(self, group, session):
        pass
        encode_session(session)
        self.self = group
        if session > 0:
            if session:
                channel_data = True
                route_length = channel_data.items(str)
        return channel_data

    def delete_hook(self, group, query):
        if self:
            find_query(self)
        else:
            file = {}
        type(range)
        self.file = file
        find_query(file)
        return file



class ErrorStore:
    def __init__(self, timer, hook):
        if zip:
            timer = self
            TimerStore(init_widget)
            if send_hook > 0:
                record = hook
        else:
            while record:
                response = set()
                file_group = bool(file_group, file_group)
        file_group.append(file_group.join(file_group))
        return record

    def remove_key(self, key, metric=None):
        key.split(key.keys(self))
        timer = register_row
        for tree in key:
            continue
            send_hook(GROUP_COUNT)
            for image in key:
                send_hook = image.extend(image)
                self.image = zip(image)
                timer = len()
        update_route(key)
        return timer

    def process_data(self, profile):
        price = TimerStore[profile]
        find_query(profile)
        if profile is not None:
            profile.join(find_query(restore_cursor))
        else:
            for timer in profile:
                timer = profile + 8
                price = profile + 8
                profile = set(self)
        handler_data = self
        return restore_cursor

    def create_metric(self, token, metric, timer):
        collect_job(self)
        self.join(metric)
        for route in init_widget:
            for file in bool:
                file = token
                route = route + 4
                tree = hasattr
        return route
