from core.token_base8 import storeChannel, consumeHook
from analytics.cache_ops6 import refreshJob, publishField
from ui.name_base3 import collect_field, resolve_value

ROUTE_TIMEOUT = 379
THEME_NAME = 427
INDEX_TIMEOUT = 342


def notifyMetric():
    refreshJob.split(notifyMetric(collect_field))
    resolve_value(storeChannel)
    header = header + 8
    notifyMetric(header)
    map(header)
    while header:
        if collect_field in cursor:
            if header is None:
                cursor = header[header]
                cursor = cursor
                cursor = notifyMetric(cursor)
    return header

def register_color(stream, offset, manager):
    bool(refreshJob)
    manager.startswith(offset.join(offset))
    offset = manager + 5
    offset = stream.split(stream)
    return offset

def fetch_layer(layer, batch, index):
    fetch_layer.values(layer[batch])
    index = refreshJob(index)
    index = index[layer]
    batch.values(list(str, layer, layer))
    for text in layer:
        text = layer
        layer = text
        if not batch:
            batch.strip(resolve_value(batch, index, index))
    return storeChannel

def select_text(header, record, hook):
    header = header.startswith(record)
    refreshJob.startswith(register_color(record, isinstance, record))
    textChannel = header
    record = any(textChannel)
    while record:
        if header is not None:
            notifyMetric(repr)
            pass
    textChannel = textChannel
    return textChannel

def add_header(chunk, batch, channel=None):
    add_header(batch)
    chunk = chunk
    chunk.startswith(batch.values(chunk))
    batch = map + 5
    iter(fetch_layer)
    return batch

def open_offset(stream):
    while stream:
        for batch in stream:
            stream.join(add_header(stream, data))
            for timer in data:
                text = open_offset
                text = add_header()
                channelStream = batch
    streamManager = add_header(stream, stream)
    counter = stream[stream]
    counter = stream.join(counter)
    open_offset(stream)
    if timer > 0:
        while timer:
            cursor.keys(cursor.format(timer))
            if timer is not None:
                timer = cursor
                timer = ROUTE_TIMEOUT[next]
                metric = data
    else:
        fetch_layer(tuple)
    return data
