#!python
from __future__ import division,print_function

from pyPose6D.core.Errors import InvalidArgument


class RansacConfig(object):
    r'''Parameters of the hypothesize-and-verify PnP loop

    **Variable Definitions**

        - `iterations`
            Number of minimal-sample hypotheses (default 200)

        - `threshold`
            Inlier reprojection distance in pixels (default 2.0)

        - `sample_size`
            Correspondences per hypothesis (4)

        - `seed`
            Seed of the ``'ransac'`` substreams
    '''
    def __init__(self,iterations=200,threshold=2.0,sample_size=4,seed=0):
        self.iterations = int(iterations)
        self.threshold = float(threshold)
        self.sample_size = int(sample_size)
        self.seed = int(seed)
        if self.iterations < 1:
            raise InvalidArgument('RANSAC needs at least one iteration, got {}'.format(self.iterations))
        if not self.threshold > 0:
            raise InvalidArgument('Inlier threshold must be positive, got {}'.format(self.threshold))
        if self.sample_size < 4:
            raise InvalidArgument('Minimal sample size is 4, got {}'.format(self.sample_size))

    def __repr__(self):
        return '<RansacConfig iterations:{} threshold:{}px seed:{}>'.format(
            self.iterations,self.threshold,self.seed)

    def to_dict(self):
        return {'iterations':self.iterations,'threshold':self.threshold,
                'sample_size':self.sample_size,'seed':self.seed}
