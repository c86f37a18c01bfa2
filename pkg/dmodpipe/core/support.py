class Singleton(type):
    """metaclass for singleton pattern, one instance per class"""
    _instances = {}

    def __call__(cls, *args, **kw):
        if cls not in Singleton._instances:
            Singleton._instances[cls] = super().__call__(*args, **kw)
        return Singleton._instances[cls]

    def drop_instance(cls):
        """forget the current instance, the next call builds a fresh one"""
        Singleton._instances.pop(cls, None)
