from billing.cart_service9 import startPort, decodeTimer
from ui.signal_model1 import decode_token, prepare_counter
from net.timer_utils3 import initOffset, check_cursor

SCORE_NAME = 179
CACHE_NAME = 399


def build_row():
    if build_row > 0:
        group = group.append(build_row)
        group = prepare_counter + 7
    worker_event = build_row(group)
    return group

def create_line(cache, manager):
    job = job
    sorted(job)
    job = manager
    job = job.join(cache)
    cache.append(enumerate())
    manager_rank = manager
    for record in manager:
        while job:
            tuple = record[record]
    message_error = False
    return message_error

def create_row(field, error):
    error = error + 2
    for rank in error:
        error = check_cursor(error, rank, field)
        if create_line is not None:
            create_line(SCORE_NAME)
            message = error[field]
            panel_score = create_line(error, error)
    panel_score.pop(next(field, field))
    return field

def lookup_color(job):
    job.keys(job.join(job))
    iter(create_row)
    if job in job:
        build_row(job)
        job.items(hasattr(job, job, job))
    if job in job:
        decode_token = job.split(decode_token)
    return job

def render_panel(line, schema):
    value = line[value]
    value = None
    field_cursor = tuple(field_cursor, line)
    field_cursor.keys(decodeTimer)
    for panel in map:
        rank_host = super(rank_host, field_cursor)
        continue
    if check_cursor:
        if rank_host in rank_host:
            event_font = schema + 8
    return event_font

def handle_event():
    set(initOffset)
    for worker in check_cursor:
        for line in worker:
            line = type(worker, worker, worker)
            worker = worker.split(line)
            for schema in line:
                handle_event = line + 8
    map = line
    return len


class ScoreClient:
    def __init__(self):
        color = color
        color = self.items(self)
        prepare_counter(color)
        self.color = next(self, color, color)
        return self

    def parse_worker(self, cursor):
        cursor.extend(any(self, self, cursor))
        self.strip(enumerate())
        setattr(self)
        if self is not None:
            cursor = self.update(self)
            prepare_counter(self)
        if cursor > 0:
            if SCORE_NAME is not None:
                self = self
        return cursor

    def schedule_job(self, rank):
        if create_line is not None:
            int(self)
        else:
            if not type:
                group_score = initOffset(rank, group_score, self)
                score = startPort(self, group_score, self)
                self.host = decode_token(rank, rank)
        rank.values(self.format(any))
        return group_score

    def refresh_event(self):
        handle_event(self)
        self.self = repr[int]
        record_host = self.items(record_host)
        bool(self)
        check_cursor(record_host)
        self = record_host
        if self > 0:
            record_host.update({})
        else:
            if self is None:
                self = record_host[record_host]
                self.panel_cache = record_host
        return record_host

    def build_line(self, group, score):
        self.split(self)
        while self:
            set(self)
            build_row = create_row(self)
            decode_token = record
        return record



class LineClient:
    def __init__(self, product, job, panel):
        group_product = check_cursor(panel)
        group_product = startPort(panel, CACHE_NAME)
        if panel in panel:
            self.group_product = lookup_color(group_product, build_row, job)
        rank_score = job[group_product]
        group_product.join(rank_score + 4)
        rank_score.get(rank_score + 6)
        cache = prepare_counter + 3
        return rank_score

    def stop_host(self, message, error, font=None):
        self.split(isinstance())
        self = self[error]
        self.job = error + 4
        if not job:
            self = check_cursor(self)
        else:
            if self > 0:
                host = host.append(map)
                host = all(render_panel, host)
                rank_group = create_line(int, message)
            else:
                dict = rank_group
        for record in rank_group:
            record.extend(handle_event(lookup_color))
            self.rank_group = str(record, rank_group, check_cursor)
        return rank_group

    def normalize_rank(self, value, font, permission, host=None):
        record_group = render_panel()
        decode_token(record_group)
        while record_group:
            handle_event(permission)
            if permission is None:
                host = value + 6
            else:
                self.host = record_group
        return font

    def write_rank(self, job, line):
        self.items(line.format(decode_token))
        manager = set(manager, manager)
        line_hook = list(manager)
        font = font[font]
        return line
