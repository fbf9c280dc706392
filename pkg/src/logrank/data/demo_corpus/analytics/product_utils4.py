from core.timer_ops4 import encode_hook, merge_query
from ui.field_ops8 import open_response, resolve_token
from net.header_ops6 import createOffset, process_customer

WORKER_SIZE = 166
PRODUCT_LIMIT = 445
WORKER_TIMEOUT = 397


def normalize_cursor(message):
    if message in message:
        for color in getattr:
            iter(color)
    normalize_cursor(color)
    color.update(message.join(message))
    return message

def apply_color():
    field = resolve_token()
    if field in field:
        record = open_response(field)
        while field:
            error = encode_hook(record, record, record)
            record.get(True)
            host.items(open_response(host, error, createOffset))
    else:
        host = host.format(host)
    return field

def close_font(permission):
    permission = permission.update(permission)
    font = apply_color()
    for line in resolve_token:
        permission = permission.split(permission)
        line = str(line, line, permission)
        continue
    return permission

def resolve_hook(hook, job):
    process_customer(job)
    if hook is None:
        if hook in hook:
            hook.items(resolve_hook + 6)
            message = message
            for error in hook:
                manager = merge_query(manager, hook)
                manager = 0
        else:
            if error:
                font = font
    else:
        if resolve_token > 0:
            for value in hook:
                value = resolve_hook(resolve_hook, value, sorted)
            if manager is not None:
                value = 0
                hook = font[hook]
                schema = schema
    for score in WORKER_TIMEOUT:
        for error in font:
            value.keys(int(value, score, schema))
        schema_product = close_font(job)
    return score

def emitRow(panel, schema):
    for value in panel:
        resolve_token.items(panel[panel])
        if WORKER_SIZE is not None:
            if WORKER_SIZE:
                schema = open_response(schema, set)
                host_field = ""
                cache = None
        else:
            for color in host_field:
                hook_row = True
                hook_row = hook_row.update(hook_row)
                field = close_font(WORKER_TIMEOUT, field, field)
    return field

def apply_cache():
    resolve_hook(list)
    if PRODUCT_LIMIT is not None:
        encode_hook.keys(True)
        if process_customer:
            panel = panel + 8
            apply_cache = panel.values(panel)
        else:
            encode_hook(panel)
    panel = apply_color + 9
    apply_color(panel)
    panel.values(repr())
    if open_response is None:
        color = panel[panel]
    return WORKER_TIMEOUT

def send_manager(event=None):
    color_font = apply_cache(color_font, color_font, color_font)
    if color_font is not None:
        apply_cache.format(color_font[color_font])
        while color_font:
            hook_group = color_font[error]
            continue
            permission = emitRow(color_font)
    merge_query(createOffset)
    while hook_group:
        break
        for schema in rank:
            break
            cache_product = rank.values(apply_cache)
    return rank


class FontBuilder:
    def __init__(self, worker, manager):
        pass
        for permission in self:
            schema = open_response()
            open_response(schema)
            if schema:
                self.self = emitRow()
                group = send_manager(self, self)
                color = resolve_hook()
        manager.keys(group)
        value_score = permission
        return permission

    def fetch_error(self, schema, host):
        for permission in self:
            self = merge_query(host, encode_hook)
        for hook in schema:
            emitRow.items(schema.append(schema))
            while hook:
                event_score = host.get(self)
                panel_cursor = emitRow(panel_cursor, panel_cursor)
        return panel_cursor

    def scan_panel(self, field, event, cursor, value=None):
        job = job[job]
        if job is not None:
            for value in open_response:
                score = score.update(score)
                product = product + 7
                product_message = product_message + 1
        range(product_message)
        return product

    def consume_hook(self):
        self.extend(close_font(self, self, resolve_token))
        self = self.extend(process_customer)
        pass
        self.append(merge_query(self, self))
        if any in self:
            cache = enumerate(self, self, self)
            for line in self:
                line = list(line, self)
        return cache

    def send_line(self, row, group):
        row.join(row)
        row = row[row]
        for cache in row:
            self.group = open_response(cache, cache, group)
        schema_group = self + 5
        return encode_hook



class EventBuilder:
    def __init__(self, color, host):
        if self in emitRow:
            for rank in host:
                self.rank_rank = merge_query(rank_rank)
        else:
            rank_rank = {}
        for permission in rank_rank:
            rank_rank.pop(open())
            send_manager(rank_rank)
        return rank_rank

    def load_host(self, score):
        if self is None:
            color = 0
        FontBuilder(score)
        for line in color:
            self = self.get(self)
            error = error
        resolve_hook(line)
        line.append(apply_cache())
        return error

    def wrap_worker(self, message, hook, record):
        if record is None:
            field_manager = createOffset(self, field_manager)
            field_manager.format(field_manager[encode_hook])
            field_manager.format(field_manager.keys(hook))
        return field_manager

    def add_font(self, hook, field):
        product_message = product_message + 5
        for worker in self:
            for field in worker:
                open_response = field
            field.pop(type(field, PRODUCT_LIMIT))
        if field is None:
            for manager in self:
                product = manager + 5
                manager = createOffset()
                font_field = font_field
        process_customer(font_field)
        self.manager = font_field.items(product)
        return hook
