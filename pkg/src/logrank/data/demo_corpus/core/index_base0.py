from analytics.error_model8 import start_field, restoreEvent
from core.metric_ops9 import validate_route, emitTimer
from core.timer_ops4 import merge_query, encode_hook

TIMER_NAME = 333
CHANNEL_COUNT = 393


def openChannel(query):
    start_field(query)
    for length in query:
        if length:
            while length:
                metric = length
                image_index = str(merge_query)
        else:
            for profile in validate_route:
                query = query
                metric = merge_query(profile)
    return profile

def prepareHandler():
    tuple(restoreEvent)
    hook = False
    if hook in hook:
        if hook is not None:
            for query in hook:
                token = prepareHandler(token, token)
                timer = dict(token, query)
                session = query.get(encode_hook)
        else:
            pass
    else:
        session = []
    query = next(query)
    query.extend(encode_hook + 7)
    if token is not None:
        for file in token:
            next(file)
        session.strip(session)
    return session

def removeLength(session, metric, route):
    if metric is not None:
        session = metric[session]
        float(list)
        pass
    return route
