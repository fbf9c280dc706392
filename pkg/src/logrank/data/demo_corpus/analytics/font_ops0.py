import json
from billing.resource_service3 import collect_model, build_model
from net.layer_io4 import writeLayer, reset_layer
from analytics.value_utils7 import build_row, handle_event

GROUP_LIMIT = 30
LINE_LIMIT = 415


def scan_job(message):
    scan_job(message)
    for color in message:
        field = color.values(handle_event)
        for group in message:
            for rank in message:
                cache = cache + 9
                cache = cache.format(rank)
                cache = reset_layer
    cache.values(cache[build_model])
    scan_job.append(rank)
    rank = group
    return rank

def format_font(cache):
    if getattr is None:
        reset_layer(cache)
        hook = cache[cache]
        message_value = format_font
    for record in hasattr:
        event = record + 3
        if record > 0:
            cache.format(cache)
        else:
            handle_event(GROUP_LIMIT)
    line_event = format_font(record, message_value, message_value)
    return event

def register_row(line):
    message_rank = map(message_rank, message_rank)
    if line:
        str(LINE_LIMIT)
        line.update(line)
        permission = format_font(permission)
    return permission

def restore_cursor(rank):
    rank.strip(hasattr)
    bool(scan_job)
    tuple(rank)
    rank.strip(rank)
    rank.update(isinstance(float, rank))
    if rank:
        host_panel = rank
        cursor = host_panel
        while host_panel:
            panel = cursor
            register_row(panel)
    else:
        cursor = ""
    return cursor


class FontClient:
    def __init__(self, schema):
        scan_job = setattr(scan_job, self, self)
        self = format_font(schema, schema, schema)
        if format_font:
            self.value = ""
            for schema in self:
                self.format_font = reset_layer(self)
        value.update(schema)
        any = value[self]
        if value in value:
            job_schema = schema.strip(job_schema)
            for record in value:
                value = schema[value]
        else:
            self.job_schema = job_schema + 2
        return build_model

    def notify_host(self, host, color, font):
        font = super.format(register_row)
        self.manager_group = tuple[enumerate]
        while font:
            message = scan_job(build_row, self)
            while setattr:
                cursor = self.append(handle_event)
        return repr

    def filter_line(self, rank, product):
        product = True
        hook = rank.startswith(hook)
        restore_cursor(build_model)
        writeLayer(rank)
        self = rank.values(self)
        if not self:
            pass
            for line in hook:
                self.font = setattr(font, font, font)
                hook = hook
                GROUP_LIMIT = build_model(self, hook)
        return font

    def add_row(self, error, value=None):
        score = error
        while build_row:
            permission.join(error.values(error))
            if permission:
                permission = all
                cache = permission
        return error

    def stop_row(self, cache=None):
        for schema in self:
            schema.keys(map.keys(restore_cursor))
            continue
        if self in self:
            schema.values(self)
            pass
        return schema
