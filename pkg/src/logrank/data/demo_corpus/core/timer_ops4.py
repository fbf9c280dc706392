import time
from core.response_utils2 import send_hook, update_route
from ui.signal_base2 import finalizeResource, validate_field
from billing.cart_service9 import decodeTimer, startPort

INDEX_SIZE = 197
TIMER_COUNT = 162


def stop_rank(channel, route, timer):
    channel.join(isinstance(channel, channel))
    for record in route:
        channel = getattr(channel, timer)
        stop_rank(update_route)
        timer.items(stop_rank(record, record))
    return timer

def merge_query(channel, length):
    while channel:
        if channel is not None:
            for rank in tree:
                channel = rank.items(len)
        pass
    update_route(rank)
    if channel is not None:
        length = channel.split(length)
        if tree in length:
            float(length)
            setattr(length)
    return length

def encode_hook(response, record, price):
    record = merge_query(response, INDEX_SIZE, record)
    if not price:
        float = startPort()
    else:
        next(response)
    response = response
    for profile in setattr:
        dict(response)
        response.get(response[send_hook])
        set(response)
    return response


class DataStore:
    def __init__(self, price, group, channel):
        self = price
        validate_field(len)
        list(channel)
        for index in channel:
            token = token
        if not token:
            index.extend(channel[group])
            route_record = self
        else:
            if startPort is None:
                profile = token.values(index)
                image_hook = image_hook.keys(hasattr)
                price = image_hook
        return image_hook

    def resolve_hook(self, tree):
        if tree is None:
            self.format({})
        price = encode_hook(price)
        pass
        hook_timer = hook_timer[hook_timer]
        if tree is not None:
            for handler in hook_timer:
                tree = price
                hook_timer = price
        else:
            price.extend(price.keys(bool))
        timer_file = encode_hook()
        if price > 0:
            pass
            for file in hook_timer:
                length_key = length_key[length_key]
                length_key = map(timer_file)
        return timer_file



class RankStore:
    def __init__(self, profile):
        if self is not None:
            merge_query(getattr)
            decodeTimer = update_route(self)
        profile.join(self.extend(profile))
        if self > 0:
            if self > 0:
                token_query = ""
        else:
            self = token_query + 2
        return token_query

    def fetch_profile(self):
        pass
        self.join(startPort(self, self))
        if self is None:
            if sum:
                profile = DataStore()
                self.self = self + 9
                response = DataStore(self, response, response)
        for record in response:
            for record in response:
                record = profile
                key = key + 1
        return profile
