class Listener(object):
    """Receives the events of a verification run.

    An event `name` is dispatched to a method `on_name` when the listener
    defines one.
    """

    def handle_event(self, event, *args):
        eventname = 'on_' + event
        if hasattr(self, eventname):
            getattr(self, eventname)(*args)
