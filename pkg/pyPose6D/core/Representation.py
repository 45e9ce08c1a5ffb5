#!python
from enum import Enum

from pyPose6D.core.Errors import InvalidArgument


class Representation(Enum):
    ''' An enumeration to track which keypoint layout a set follows

    **Description**
        Keypoint sets can be built from the eight corners of an object's
        bounding cuboid, from eight farthest-point samples of the model
        surface, or from the 32-point interpolated bounding box (corners
        plus two interior points on each of the twelve edges). Loss and
        solver code checks this tag so that sets of different layouts are
        never compared against each other.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        rep = pyPose6D.Representation.from_string('ibb32')
        rep.count    # 32
        rep.collinear # True

    .. note::

        Only the :attr:`IBB32` layout carries collinear 4-tuples, so it is the
        only representation with a non-trivial cross-ratio loss.

    '''
    BB8   = 1
    FPS8  = 2
    IBB32 = 3

    @property
    def count(self):
        '''Number of keypoints in a set of this representation'''
        return 32 if self is Representation.IBB32 else 8

    @property
    def collinear(self):
        return self is Representation.IBB32

    @classmethod
    def from_string(cls,name):
        '''Look up a representation by case-insensitive name ('bb8','fps8','ibb32')'''
        try:
            return cls[str(name).upper()]
        except KeyError:
            raise InvalidArgument('Unknown keypoint representation: {}'.format(name))
