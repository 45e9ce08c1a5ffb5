#!python
from __future__ import division,print_function

from pyPose6D.matching.TargetTuple import TargetTuple
from pyPose6D.io.SceneAnnotation import SceneAnnotation


class SyntheticSample(object):
    r'''One generated image with its set-prediction targets

    **Variable Definitions**

        - `raster`
            (height,width,3) float32 silhouette image in [0,1]

        - `targets`
            list of :class:`pyPose6D.TargetTuple` (no ∅ padding)

        - `cam`
            :class:`pyPose6D.CameraIntrinsics`

        - `seed`
            Seed the sample was generated from

    Class ids are 0-based for the classifier; BOP object ids are
    ``class_id+1``.
    '''
    def __init__(self,raster,targets,cam,seed):
        self.raster = raster
        self.targets = list(targets)
        self.cam = cam
        self.seed = int(seed)

    def __repr__(self):
        return '<SyntheticSample seed:{} objects:{}>'.format(self.seed,len(self.targets))

    def __len__(self):
        return len(self.targets)

    def padded_targets(self,n):
        '''Targets followed by ∅ entries up to length `n`'''
        assert n >= len(self.targets),'More objects than queries'
        return self.targets + [TargetTuple.null() for _ in range(n-len(self.targets))]

    def to_annotation(self,scene_id,im_id):
        return SceneAnnotation(scene_id,im_id,self.cam,[(t.class_id+1,t.pose) for t in self.targets])

