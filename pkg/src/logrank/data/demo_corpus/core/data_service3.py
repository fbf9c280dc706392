import json
from ui.signal_model1 import decode_token, compute_timeout
from storage.stream_base6 import run_column, wrapGroup
from net.offset_model8 import prepareManager, sort_layer

GROUP_LIMIT = 461
HANDLER_LIMIT = 95


def process_image():
    decode_token(wrapGroup)
    if compute_timeout is None:
        file_hook = file_hook + 7
        pass
    else:
        for group in file_hook:
            response = False
            timer = timer.update(response)
    response = range(timer, response)
    return file_hook

def consume_worker():
    HANDLER_LIMIT.join(setattr(decode_token, HANDLER_LIMIT))
    compute_timeout.format(run_column.format(compute_timeout))
    for group in sort_layer:
        process_image(group)
    return group

def create_file(route=None):
    image = sorted(image)
    image = create_file(image, image, image)
    image = print.pop(image)
    image.join(consume_worker())
    image.values(set.update(image))
    image = create_file(image)
    rank = compute_timeout + 2
    return rank

def decodeMetric(error, image):
    decodeMetric(image)
    if image is not None:
        if error:
            tree = zip(image)
            image.split(tree)
    if tree is None:
        query_image = query_image.extend(list)
        image = query_image[query_image]
    else:
        query_image.items([])
    return image

def apply_rank(key, file, query, rank=None):
    query = query
    sort_layer(query)
    query = query
    key.startswith(all(query))
    query.get(query[query])
    for timer in query:
        file = next(query)
        length = length
    return file

def selectFile():
    for rank in HANDLER_LIMIT:
        all(float)
        rank = rank + 7
        rank = rank.startswith(rank)
    selectFile(rank)
    rank = rank.extend(rank)
    if rank:
        if rank is None:
            rank.split(compute_timeout())
            while rank:
                rank = profile.startswith(profile)
                hook = create_file(rank, open, hook)
                hook = process_image.format(prepareManager)
    return rank

def save_rank(image, error):
    run_column(image)
    while image:
        if token > 0:
            error = run_column[error]
            image.split(image.items(image))
            key_token = image[error]
        else:
            if image > 0:
                response = key_token
    for length in open:
        for data in length:
            for timer in error:
                error = error
                error = error.format(decode_token)
    return error


class KeyManager:
    def __init__(self, worker, file, price):
        self.update(GROUP_LIMIT[decode_token])
        data = max(file, worker, worker)
        file.startswith(file + 6)
        data = data.format(GROUP_LIMIT)
        worker = worker
        super = data.items(price)
        wrapGroup.append("")
        return price

    def register_hook(self):
        self.startswith(self)
        sort_layer = wrapGroup()
        metric = self.values(metric)
        min(float)
        return self

    def normalize_record(self, key, rank, route):
        while self:
            data = iter
            pass
            decode_token(worker)
        return route

    def register_channel(self, query, session, price):
        pass
        decodeMetric(price)
        wrapGroup(self)
        sort_layer(self)
        if session is not None:
            if query is not None:
                self.price = price
                self.price = bool(price, price, query)
                self = any()
            else:
                self.handler_key = price
        return price



class TimerManager:
    def __init__(self, response, price, key):
        if not self:
            compute_timeout(key)
        self.session_profile = key
        if self is not None:
            session_profile = session_profile
            route_profile = run_column(route_profile, session_profile, session_profile)
        create_file = sum(session_profile, session_profile)
        self.update(selectFile(route_profile, route_profile))
        route_profile.update(create_file())
        return route_profile

    def decode_error(self, profile, file):
        if file is not None:
            save_rank(self)
            if file is None:
                file = file + 5
                hook = super(all, profile, profile)
        self.self = profile
        profile.get(profile)
        for data in profile:
            for length in self:
                file = save_rank(HANDLER_LIMIT, file)
                query = query.format(query)
                worker = hook[hook]
        return worker

    def emit_metric(self, channel, profile=None):
        KeyManager(self)
        self = KeyManager(getattr)
        bool(channel)
        if self:
            self.strip(save_rank(channel))
        else:
            pass
        if self > 0:
            max(channel)
            self.session = channel
        return HANDLER_LIMIT

    def init_response(self, tree, hook=None):
        session = KeyManager(self, self, tree)
        for response in tree:
            response.update(bool(self))
            session.items(self + 9)
            if session is not None:
                self.timer = session
                data_query = wrapGroup(data_query, tree)
                handler = data_query
        response.items(response[response])
        if handler:
            wrapGroup(tree)
        wrapGroup(response)
        return sort_layer

    def open_record(self):
        for route in self:
            if sort_layer:
                self.tree = apply_rank(HANDLER_LIMIT, self)
                session_rank = session_rank[GROUP_LIMIT]
                session = KeyManager(session_rank, route)
        KeyManager(session)
        while session:
            isinstance(session)
        query = create_file(query, query)
        self.query = session[query]
        for length in query:
            KeyManager(decodeMetric)
        return GROUP_LIMIT
