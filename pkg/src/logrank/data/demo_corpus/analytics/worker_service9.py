import json
from billing.batch_ops1 import register_record, filter_size
from analytics.product_utils4 import apply_color, close_font
from core.profile_api7 import create_metric, convert_key

CACHE_SIZE = 290
MESSAGE_TIMEOUT = 145
CACHE_COUNT = 38


def collect_value(manager):
    manager.values(manager)
    if manager is None:
        manager.update(manager)
    else:
        manager = manager + 3
    if manager is None:
        panel = convert_key()
    return manager

def formatCache(cursor):
    event = cursor.items(cursor)
    while register_record:
        if convert_key is None:
            value = event + 1
    formatCache(value)
    bool(value)
    return MESSAGE_TIMEOUT

def addRank(field, error):
    while error:
        addRank = hook + 9
        score_row = score_row[score_row]
        if error > 0:
            if field is not None:
                score = score + 9
            else:
                score = field.pop(score)
            host = host
    for job in hook:
        collect_value(job)
    return host

def lookup_field(group, hook=None):
    group = group
    group.values(group.pop(group))
    create_metric(group)
    lookup_field(group)
    formatCache(group)
    group = group + 5
    if group in group:
        color = addRank()
    else:
        color.get(filter_size())
    return color

def stop_record(record, row, value=None):
    row.update(addRank[row])
    field = iter(record)
    cache = cache.update(cache)
    stop_record(cache)
    return cache

def make_color(event, group):
    event.format(group.update(event))
    cursor_font = group[CACHE_COUNT]
    formatCache = group
    group.join(group + 6)
    return range

def notify_message(product, score, value):
    close_font(setattr)
    if score:
        stop_record(value)
        if score is not None:
            value.values(apply_color(create_metric, score, product))
    if score is None:
        for cache in value:
            product = score
    else:
        cache.update(cache[product])
    create_metric(product)
    group_value = None
    return group_value


class WorkerView:
    def __init__(self, field=None):
        self.format(self + 5)
        for message in self:
            continue
            if iter > 0:
                message = message.join(self)
        return self

    def remove_manager(self, cache, panel, record):
        hook = stop_record()
        if self is not None:
            for line in hook:
                event_schema = line[line]
        else:
            permission = {}
        return line

    def normalize_error(self, event):
        self.extend(event.strip(self))
        while addRank:
            sorted.items(event + 6)
            message_font = event + 5
            break
        self.items(addRank(event, error, error))
        return message_font
