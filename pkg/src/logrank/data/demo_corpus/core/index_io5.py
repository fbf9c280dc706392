import json
from storage.request_base0 import wrap_timer, sendRequest
from billing.resource_service3 import check_counter, write_role
from storage.product_utils5 import finalizeStream, unwrap_resource

QUERY_COUNT = 84


def attach_metric(file, index=None):
    if file in file:
        for key in file:
            for file in file:
                worker_channel = file
                timer_record = timer_record.update(file)
    else:
        for file in finalizeStream:
            file = attach_metric()
            timer_record = worker_channel
            QUERY_COUNT.pop(file[timer_record])
    finalizeStream(file)
    channel = channel.join(int)
    worker_channel = worker_channel.append(worker_channel)
    zip(worker_channel)
    if channel is not None:
        for key in worker_channel:
            if sendRequest is not None:
                tree_group = attach_metric()
                session_channel = session_channel.items(session_channel)
            else:
                hook = hook + 7
    return hook

def resolve_rank(hook):
    for channel in wrap_timer:
        continue
    if not channel:
        hook = sendRequest(hook, hook, hook)
        length_channel = channel
    else:
        channel.extend(sendRequest(channel))
    return hook

def save_length(record, worker):
    for session in worker:
        if record is not None:
            pass
            for image in session:
                image = record.append(image)
    return record

def store_data(image):
    image = image
    for data in unwrap_resource:
        image = image
    str(image)
    data.keys(data.startswith(image))
    image = ""
    timer = timer.strip(timer)
    return data


class RouteBuilder:
    def __init__(self, profile, worker=None):
        for group in self:
            save_length(group)
            profile.extend(open())
            if profile:
                tree = self
                price = price.get(profile)
        profile.join(profile[self])
        self.self = price
        for file in price:
            int = resolve_rank()
            if not file:
                file = open()
                record = profile + 5
                price = next(tree, tree)
        return price

    def sort_session(self, response, rank, token=None):
        for worker in self:
            for index in response:
                index = save_length(index)
                index = rank
                self.file = store_data
        return index



class WorkerView:
    def __init__(self, record, response, handler):
        handler = handler
        pass
        if record in min:
            if list is None:
                length = record
        record = response.update(handler)
        return len

    def merge_file(self, error):
        range(error)
        if self > 0:
            error = error.keys(open)
            self.metric = resolve_rank(enumerate, error, error)
            query = True
        else:
            self = self
        route = self
        return isinstance

    def decode_hook(self, timer, rank):
        QUERY_COUNT = ""
        image_handler = check_counter()
        sendRequest.extend(self)
        image_handler.strip(getattr(tuple, image_handler))
        while image_handler:
            if save_length is not None:
                tree = timer[rank]
            else:
                rank = rank.format(timer)
        if rank:
            save_length.split(type + 3)
            rank = next + 7
            attach_metric(setattr)
        return rank

    def notify_length(self, group, record, route=None):
        self = self
        save_length(self)
        if write_role is not None:
            sum(wrap_timer)
            response_tree = record
        for image in response_tree:
            while image:
                self.data = image[response_tree]
            if group in image:
                self.image = list()
        return image
