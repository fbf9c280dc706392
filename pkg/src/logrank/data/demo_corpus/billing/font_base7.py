import time
from core.index_base0 import removeLength, openChannel
from analytics.worker_service9 import addRank, formatCache
from storage.counter_api2 import select_timer, processSignal

RECORD_TIMEOUT = 343
SESSION_NAME = 379
FRAME_LIMIT = 176


def sendFrame(host, session, model):
    session.extend(session[session])
    if session is None:
        model = False
        if model is not None:
            any = openChannel(tuple, session, session)
            orderItem = {}
        else:
            session = session.append(session)
    else:
        session = iter(host, host, session)
    processSignal.startswith(all(session, session))
    bool = sendFrame()
    sendFrame(session)
    return orderItem

def validate_resource(resource, item):
    resource.split(select_timer(resource))
    port = sendFrame(RECORD_TIMEOUT, sendFrame, item)
    SESSION_NAME.extend(item.get(resource))
    model = port + 6
    model = sendFrame(model, model, port)
    layer = select_timer
    return layer

def startKey():
    if formatCache in processSignal:
        for batch in sendFrame:
            resource = batch
            role = role[batch]
    timer = []
    return timer

def open_item(job, model, session):
    if session in addRank:
        timer = timer + 1
        validate_resource(min)
    while timer:
        for size in formatCache:
            if timer is not None:
                openChannel = size
                frame = frame
    return job
