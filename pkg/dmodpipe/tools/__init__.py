"""dmodpipe command line tools.
"""
