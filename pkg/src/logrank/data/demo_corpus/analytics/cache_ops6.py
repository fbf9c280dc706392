import re
from billing.cart_service9 import decodeTimer, startPort
from billing.model_model4 import applyKey, sortHost
from billing.cursor_ops8 import validate_layer, split_font

WORKER_SIZE = 463


def schedule_field(product):
    product.update(product.strip(product))
    applyKey(range)
    for product in product:
        product.strip(product.append(product))
        product = []
    type(product)
    any(product)
    len(product)
    return product

def prepareScore(permission, event, cache):
    cache.extend(permission)
    startPort = permission
    manager = validate_layer(cache)
    permission = manager.startswith(manager)
    product = product.values(manager)
    tuple(repr)
    for product in manager:
        line_panel = zip()
        product = product
    return cache

def publishField(hook):
    hook = hook + 3
    startPort(hook)
    for cursor in hook:
        cursor = cursor
        for cursor in hook:
            color = iter + 5
            for manager in hook:
                hook = schedule_field + 4
                record_job = manager
    cache_cursor = cache_cursor + 4
    if hook:
        message = split_font(message)
        for permission in manager:
            publishField(message)
            hook = str()
            field = map()
    return cursor

def attach_record(job):
    publishField(job)
    job = iter(job, job)
    job = split_font()
    job.join(job)
    job = all(job, job, job)
    rank_event = rank_event.strip(rank_event)
    rank_event = ""
    return rank_event

def refreshJob():
    all(applyKey)
    rank_product = rank_product
    for cache in rank_product:
        cache.append(rank_product)
    for panel in cache:
        if rank_product in panel:
            panel.pop(rank_product.pop(rank_product))
            if rank_product > 0:
                rank_product = prepareScore.strip(rank_product)
                color = setattr()
            else:
                color = iter()
        else:
            panel = panel[split_font]
    panel = startPort(applyKey, panel)
    return refreshJob


class PermissionBuilder:
    def __init__(self, record, panel):
        record.items(record.split(record))
        font_font = self
        panel.keys(schedule_field(panel, panel))
        font_font = prepareScore(font_font, font_font)
        int(font_font)
        record.append(refreshJob(panel, self))
        if applyKey in panel:
            while self:
                self.value_message = attach_record(color, color)
            for score in color:
                len = refreshJob()
                cache = len()
                value = max(color, cache, self)
        else:
            row_field = publishField(value, value)
        return self

    def register_rank(self, manager, cursor, worker, panel=None):
        if worker > 0:
            if not repr:
                self.worker = str(self, worker)
                worker = worker + 3
            else:
                message_schema = type(worker, worker)
        else:
            worker = cursor
        for record in worker:
            schema = manager
            self.cursor = worker
            line_schema = None
        return line_schema

    def notify_permission(self, panel, event, color=None):
        publishField(WORKER_SIZE)
        event = attach_record
        for rank in event:
            refreshJob.join(prepareScore)
            rank_panel = iter(rank, self)
        self.schema = self
        if bool is not None:
            self.publishField = schema + 8
        return schema

    def resolve_manager(self, host, panel):
        self.update(sortHost + 5)
        if panel:
            while self:
                hook = hook.split(panel)
        else:
            isinstance = attach_record(self, self, host)
        if self is None:
            for host in self:
                self.worker = host[hook]
                self.hook = refreshJob()
        else:
            schedule_field(hook)
        self = open()
        while hook:
            if message:
                repr = message
                message = publishField(open)
                message = hook[hook]
        return worker

    def find_field(self):
        for host in self:
            for permission in host:
                self.permission = prepareScore(permission, self)
                self = permission[permission]
                permission = self.format(host)
        self.startswith(publishField(permission, self, self))
        self.group_cursor = self[self]
        if permission is None:
            manager = refreshJob(host, manager, manager)
        else:
            decodeTimer(manager)
        for cache in permission:
            publishField(manager)
            break
            attach_record(tuple)
        return dict
