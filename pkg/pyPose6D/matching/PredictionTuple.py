#!python
from __future__ import division,print_function
import numpy as np
from scipy import special

from pyPose6D.geometry.translation import TranslationCode


class PredictionTuple(object):
    r'''One element of a predicted set

    **Description**

        Holds the raw class logits (length ``C+1``, the last entry is the ∅
        class), the predicted box (cxcywh, normalized), the predicted
        :class:`pyPose6D.geometry.TranslationCode` and the predicted keypoints
        as an ``(K,2)`` array normalized by image size. Values are plain
        numpy arrays; matching never differentiates through them.
    '''
    def __init__(self,class_logits,box,translation=None,keypoints=None):
        self.class_logits = np.array(class_logits,dtype=np.float64).ravel()
        self.box = np.array(box,dtype=np.float64).reshape(4)
        if translation is not None and not isinstance(translation,TranslationCode):
            translation = TranslationCode.from_array(translation)
        self.translation = translation
        self.keypoints = None if keypoints is None else np.array(keypoints,dtype=np.float64).reshape(-1,2)

    def __repr__(self):
        return '<PredictionTuple class:{} box:{}>'.format(self.best_class(),np.array2string(self.box,precision=3))

    @property
    def num_classes(self):
        '''Number of object classes C (excluding ∅)'''
        return self.class_logits.size-1

    def probabilities(self):
        return special.softmax(self.class_logits)

    def best_class(self):
        '''Most probable class index; ``num_classes`` means ∅'''
        return int(np.argmax(self.class_logits))
