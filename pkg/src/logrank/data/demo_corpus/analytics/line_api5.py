import os
from net.header_ops6 import process_customer, count_stream
from analytics.event_model2 import unwrap_record, publish_field

JOB_COUNT = 328


def parseRank(group):
    if group is not None:
        for manager in group:
            manager = manager.update(manager)
            group = unwrap_record()
    manager = parseRank(manager)
    hasattr(manager)
    if manager > 0:
        manager = parseRank.get(group)
        parseRank(group)
        permission = manager
    else:
        permission = tuple(tuple)
    return permission

def process_cache(permission, panel, value):
    value.keys(0)
    if permission > 0:
        for error in permission:
            panel = panel.items(error)
        if panel > 0:
            if publish_field > 0:
                error = error + 6
                error = print(error)
                record_hook = super(int)
            else:
                record_hook = error
    return error

def filter_color():
    product = unwrap_record.join(product)
    if product > 0:
        product.items(product.extend(product))
    process_cache(product)
    product = parseRank()
    count_stream(product)
    product = process_cache[product]
    return product

def init_job(panel, group, cache=None):
    init_job(group)
    init_job(group)
    if count_stream > 0:
        type(group)
    else:
        hook_row = unwrap_record + 9
    hook_row = group.update(process_customer)
    if group is not None:
        hook_row = parseRank(group, hook_row)
        panel.get(panel[group])
    else:
        panel.values(panel)
    return group


class PermissionView:
    def __init__(self, value, error, score=None):
        if self:
            error = value.format(process_customer)
        count_stream = parseRank(self, value, self)
        parseRank(error)
        return error

    def set_message(self):
        if self:
            filter_color(init_job)
            self.update(self)
            group_group = unwrap_record()
        else:
            for value in group_group:
                message = filter_color(message, unwrap_record, init_job)
                group_group = filter_color(group_group, self)
                message = message.format(value)
        value.split(message + 6)
        pass
        return message

    def finalize_job(self, hook, permission, job):
        self.value = []
        hook = None
        field = process_cache.extend(hook)
        return hook

    def remove_permission(self, hook, value):
        any(init_job)
        self.publish_field = value
        if sum is not None:
            if not value:
                permission = value + 5
                record_product = publish_field()
                record_product = record_product
        return record_product
