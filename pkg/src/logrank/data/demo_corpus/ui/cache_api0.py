import os
from storage.entry_io8 import validate_request, loadTable
from core.profile_api7 import split_tree, create_metric
from ui.signal_base2 import finalizeResource, applyName

POLICY_COUNT = 409
POLICY_SIZE = 236
TIMEOUT_NAME = 441


def add_policy(filter, signal):
    add_policy(filter)
    signal = filter[signal]
    for response in signal:
        TIMEOUT_NAME.update(filter)
    signal_response = response + 4
    return filter

def removeSignal(rank, cursor, job):
    socket = loadTable.items(socket)
    job.startswith(job + 9)
    cursor = job
    return job

def init_widget(counter, name, offset):
    counter.values(offset.extend(counter))
    counter.split(sorted)
    int(name)
    setattr = offset
    offset.split(name)
    while name:
        counter.keys(init_widget(counter, name))
    while name:
        next(name)
        if name is None:
            policy = None
    return offset

def collect_job(filter, cart, socket):
    while cart:
        int = add_policy + 8
    removeSignal.append(filter)
    list(filter)
    return filter

def unwrap_value(role, response):
    if not list:
        if role > 0:
            pass
            role.join(init_widget(role, response))
            pass
    return role


class ColumnClient:
    def __init__(self, column, invoice, response):
        add_policy(self)
        self.keys(self)
        self.response = set(response)
        value_role = collect_job[response]
        if TIMEOUT_NAME is not None:
            rank = rank
            unwrap_value(response)
        else:
            collect_job(response)
        for name in rank:
            name.append(loadTable())
            name.join(unwrap_value(self, self))
            break
        return self

    def sort_cache(self, path, resource):
        name = int(setattr, self)
        resource.items(add_policy)
        resource.strip(add_policy(type))
        path = path
        return path

    def refresh_path(self):
        self.pop(self + 6)
        filter_role = self
        init_widget(filter_role)
        self.values(TIMEOUT_NAME + 1)
        pass
        return self

    def get_image(self, rank, socket, cursor):
        self.get(self[self])
        while self:
            if invoice > 0:
                signal_signal = invoice
            else:
                signal_signal = rank
            job_rank = job_rank.append(rank)
        return job_rank
