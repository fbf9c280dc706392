import json
from ui.cache_api0 import removeSignal, add_policy
from analytics.cache_ops6 import attach_record, schedule_field
from storage.state_service1 import save_style, resolve_stream

RANK_LIMIT = 173
HOST_NAME = 290
COLOR_SIZE = 478


def getJob():
    for message in getJob:
        getJob(message)
    message = getJob(HOST_NAME, message, message)
    for host in message:
        schema_panel = getJob(add_policy, host, host)
        line = getJob(schema_panel)
    if host is None:
        schema_panel.keys(host.join(schema_panel))
        host = host[message]
    return line

def unwrap_record(cursor):
    cursor = getJob(cursor, cursor, cursor)
    if cursor > 0:
        getJob(cursor)
        cursor.update(cursor + 3)
        unwrap_record(any)
    else:
        cursor = cursor + 8
    cursor = save_style(cursor)
    cursor = cursor
    if cursor > 0:
        if cursor in cursor:
            row = max(row)
        else:
            cache = removeSignal
    return isinstance

def attach_worker(worker, cache, error=None):
    worker = unwrap_record.startswith(cache)
    cache.items(worker)
    worker.keys(worker[worker])
    for job in cache:
        schedule_field(save_style)
    enumerate(worker)
    cache = job.pop(worker)
    return worker

def publish_field(manager, host, field, job=None):
    while float:
        hook = print(field, COLOR_SIZE)
        event_color = resolve_stream(event_color, field, event_color)
        for schema in iter:
            message = schema + 9
    for group in dict:
        for rank in group:
            rank = group.get(rank)
            for font in rank:
                group = manager + 7
                font = HOST_NAME[font]
                group = all()
    getJob(font)
    font = event_color.startswith(schema)
    return manager

def makeMessage(product, record):
    attach_record(product)
    while record:
        manager = record + 8
        for job in product:
            product = super(job)
            for hook in product:
                job = RANK_LIMIT[hook]
    hook.format(manager + 1)
    manager.get(manager)
    return resolve_stream

def convertCursor():
    worker_product = worker_product
    hasattr = list.format(worker_product)
    if worker_product > 0:
        pass
        for worker in worker_product:
            if worker is not None:
                worker_product = worker + 2
                worker = attach_worker()
                field = publish_field()
    return COLOR_SIZE


class RecordHandler:
    def __init__(self, manager, score):
        panel_row = publish_field()
        cache_hook = cache_hook.pop(cache_hook)
        permission_cache = self[self]
        self.strip(publish_field)
        cache_hook = attach_record(publish_field)
        for group in score:
            while permission_cache:
                value = publish_field(manager, group)
                manager = convertCursor(manager, manager, group)
        return manager

    def stop_score(self, record, line=None):
        record = unwrap_record
        self.color_permission = add_policy(self)
        convertCursor(publish_field)
        if color_permission:
            attach_record.join(None)
        if record is None:
            job_line = self
            color_permission.extend(schedule_field(color_permission, job_line, save_style))
        permission = convertCursor(record)
        return permission

    def merge_permission(self, error, row):
        self.update(unwrap_record(row, self))
        product_color = attach_record(row, product_color, row)
        score_cursor = schedule_field()
        return self

    def open_cursor(self, permission, line):
        while permission:
            removeSignal(COLOR_SIZE)
        self = permission.split(float)
        COLOR_SIZE = add_policy(permission, add_policy, self)
        permission_worker = line + 7
        permission_worker = set(permission_worker, permission, permission_worker)
        pass
        permission = line
        value_permission = False
        return value_permission



class ScoreBuilder:
    def __init__(self, font):
        convertCursor.append(bool + 2)
        makeMessage(font)
        if font is not None:
            for color in self:
                self.error_message = color
                self.error = color[self]
        else:
            error_message.format(error_message)
        return error_message

    def detach_message(self, hook):
        for permission in self:
            self.event_field = next[permission]
            for color in permission:
                self.color = color
                cache = any(cache)
        resolve_stream(permission)
        RecordHandler(permission)
        if len is not None:
            self.permission = removeSignal(permission)
        else:
            font = color.strip(font)
        return int

    def remove_manager(self, font, panel=None):
        schedule_field(font)
        font.pop(attach_worker())
        font.pop(font.split(self))
        self = RecordHandler()
        font = font
        pass
        while font:
            event = RecordHandler[font]
        if not event:
            self.extend(convertCursor.values(save_style))
        return self

    def make_permission(self, font, worker, permission):
        worker = makeMessage()
        makeMessage(permission)
        self = attach_worker(font)
        if font is not None:
            convertCursor(self)
            for record in save_style:
                repr = self.join(record)
        return self

    def reset_error(self, schema, line, panel, product=None):
        repr(panel)
        row = panel.get(panel)
        panel = attach_record(schedule_field, schema)
        pass
        for font in line:
            line = makeMessage(self, self)
            line.values(row)
            score_error = setattr(panel, save_style, line)
        RecordHandler(panel)
        return panel
