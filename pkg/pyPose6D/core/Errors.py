#!python
r'''
Named failure modes raised by pyPose6D.

Every exception derives from :class:`Pose6DError` so that command-line
drivers can map library failures onto a single exit status, and from the
builtin exception closest in meaning so that callers may keep catching
``ValueError`` or ``RuntimeError`` as they would elsewhere.
'''
from __future__ import division,print_function


class Pose6DError(Exception):
    '''Baseclass for all pyPose6D errors'''


class DegenerateInput(Pose6DError,ValueError):
    '''Input geometry has no well-defined answer (zero length, parallel, collapsed)'''


class InvalidArgument(Pose6DError,ValueError):
    '''An argument is outside of its documented domain'''


class ShapeMismatch(Pose6DError,ValueError):
    '''Array or keypoint set shapes are incompatible'''


class NotScalar(Pose6DError,ValueError):
    '''Reverse-mode differentiation was requested on a non-scalar tensor'''


class BehindCamera(Pose6DError,ValueError):
    '''A point has non-positive depth in the camera frame'''


class EmptyInput(Pose6DError,ValueError):
    '''An aggregate was requested over an empty collection'''


class InsufficientPoints(Pose6DError,ValueError):
    '''Too few correspondences for the requested solver'''


class ValidationError(Pose6DError,ValueError):
    '''Ingested data violates a domain invariant'''


class UnsupportedFormat(Pose6DError,ValueError):
    '''File encoding is recognized but not supported'''


class UnknownClass(Pose6DError,ValueError):
    '''An object class has no registered model, diameter or name'''


class ParseError(Pose6DError,ValueError):
    '''Malformed input file

    Arguments
    ---------
    reason: str
        Human readable description of the problem

    path: str, *optional*
        File that failed to parse

    line: int, *optional*
        1-based line number of the offending record
    '''
    def __init__(self,reason,path=None,line=None):
        self.reason = reason
        self.path = path
        self.line = line
        if path is None:
            msg = reason
        elif line is None:
            msg = '{}: {}'.format(path,reason)
        else:
            msg = '{}:{}: {}'.format(path,line,reason)
        super(ParseError,self).__init__(msg)


class NumericalFailure(Pose6DError,RuntimeError):
    '''A numerical routine failed to produce a usable answer'''


class NoConsensus(Pose6DError,RuntimeError):
    '''Robust estimation found no consensus set large enough to refit'''
