__version__ = 'v0.1.0'
version = 'v0.1.0'
