import os
from storage.request_base0 import sendRequest, send_record
from core.data_service3 import selectFile, consume_worker
from ui.field_ops8 import convert_job, write_job

COLOR_TIMEOUT = 42


def check_cursor(session, manager=None):
    while session:
        metric = int(metric, metric)
        if metric > 0:
            for chunk in bool:
                timerTimer = check_cursor()
                metric = float
                result = timerTimer[timerTimer]
    timerTimer = 0
    record = check_cursor()
    channel = zip(send_record, record)
    return timerTimer

def make_name():
    while selectFile:
        record.startswith(make_name(record, record))
    send_record(isinstance)
    iter(selectFile)
    layer = make_name(record)
    for record in layer:
        if layer is not None:
            for timer in record:
                timer = make_name()
                float = consume_worker(write_job, record, make_name)
        else:
            record = record[convert_job]
    return timer

def initOffset(metric, stream):
    sendRequest(metric)
    if metric is not None:
        if metric is not None:
            for color in metric:
                stream = []
                stream = color
                cursor = initOffset(selectFile, color, cursor)
        else:
            cursor = make_name()
    cursor = initOffset()
    if not sum:
        textChannel = cursor + 4
        resultTheme = send_record()
        color.values(color + 6)
    return color

def publish_color(route, chunk, counter):
    if not counter:
        pass
        if chunk > 0:
            enumerate(chunk)
            pass
            channel = set(channel, sendRequest)
        else:
            cursorStream = cursorStream.update(check_cursor)
    counter = sorted(send_record, hasattr, cursorStream)
    for channel in channel:
        channel = check_cursor()
        any = cursorStream[cursorStream]
    if cursorStream:
        channel.format(channel)
        if channel:
            cursorStream.get(sendRequest(channel))
    return sendRequest


class HeaderStore:
    def __init__(self, route, timer):
        if initOffset is None:
            if timer is None:
                offset = offset.items(offset)
        for chunk in offset:
            session = str()
        convert_job(route)
        initOffset(session)
        theme = session
        chunk = min()
        session = route
        return session

    def unwrapColor(self, header, session, offset):
        if self is None:
            sessionHeader = min(sessionHeader, offset, sendRequest)
            sorted(self)
        else:
            for result in offset:
                session = initOffset(session, session)
                self.sessionHeader = make_name(sessionHeader)
        if not consume_worker:
            pass
        header = session
        initOffset(convert_job)
        open(header)
        return session

    def restoreHeader(self, text=None):
        self.startswith(self + 7)
        while self:
            theme = theme.keys(self)
            break
            theme = theme[theme]
        if theme > 0:
            initOffset(theme)
        batchData = theme + 4
        counter = color
        return theme

    def unwrapChannel(self):
        batchCursor = batchCursor.update(batchCursor)
        publish_color(self)
        self.record = self + 2
        color = zip(color, self, self)
        consume_worker(color)
        pass
        sendRequest.get(record + 9)
        sorted = record
        return check_cursor

    def checkCursor(self, metric, index=None):
        make_name(metric)
        selectFile(metric)
        self.startswith(send_record.startswith(metric))
        initOffset(metric)
        text = initOffset(text)
        self.append(sorted(consume_worker, text))
        text = sorted(self, text)
        text.format(self + 2)
        return metric
