#!python
from __future__ import division,print_function
from collections import OrderedDict

import numpy as np

from pyPose6D.core.Tensor import Tensor
from pyPose6D.core.Errors import ShapeMismatch


class Module(object):
    r'''Baseclass of the trainable building blocks

    **Description**

        A Module owns named parameters (leaf :class:`pyPose6D.core.Tensor`
        objects created with :meth:`parameter`) and child modules (plain
        attributes, or lists of modules). :meth:`parameters` walks the tree
        in attribute-definition order and returns dotted names such as
        ``encoder.0.attention.query.weight``, which are also the keys of
        checkpoint blobs.

        The ``training`` flag is shared down the tree with :meth:`train`
        and :meth:`eval`; only dropout looks at it.

    .. note::

        This class should not be used/instatiated directly. Subclasses
        implement ``forward``; calling the module calls ``forward``.
    '''
    def __init__(self):
        self._children = OrderedDict()
        self._parameters = OrderedDict()
        self.training = True

    def __setattr__(self,name,value):
        if isinstance(value,Module) or (isinstance(value,list) and value and all(isinstance(v,Module) for v in value)):
            self.__dict__.setdefault('_children',OrderedDict())[name] = value
        object.__setattr__(self,name,value)

    def __call__(self,*args,**kwargs):
        return self.forward(*args,**kwargs)

    def forward(self,*args,**kwargs):
        raise NotImplementedError('Modules must implement forward')

    def parameter(self,name,data):
        '''Register `data` as a trainable parameter of the active dtype'''
        p = Tensor(data,requires_grad=True,name=name)
        self._parameters[name] = p
        object.__setattr__(self,name,p)
        return p

    def _named_children(self):
        for name,child in self._children.items():
            if isinstance(child,list):
                for i,c in enumerate(child):
                    yield '{}.{}'.format(name,i),c
            else:
                yield name,child

    def parameters(self,prefix=''):
        '''OrderedDict of dotted name -> parameter Tensor'''
        out = OrderedDict()
        for name,p in self._parameters.items():
            out[prefix+name] = p
        for name,child in self._named_children():
            out.update(child.parameters(prefix+name+'.'))
        return out

    def modules(self):
        yield self
        for _,child in self._named_children():
            for m in child.modules():
                yield m

    def num_parameters(self):
        return int(sum(p.size for p in self.parameters().values()))

    def train(self,mode=True):
        for m in self.modules():
            m.training = bool(mode)
        return self

    def eval(self):
        return self.train(False)

    def zero_grad(self):
        for p in self.parameters().values():
            p.zero_grad()

    def gradients(self):
        '''OrderedDict of name -> gradient array (None when untouched)'''
        return OrderedDict((k,p.grad) for k,p in self.parameters().items())

    def state_dict(self):
        '''Copies of every parameter array'''
        return OrderedDict((k,p.data.copy()) for k,p in self.parameters().items())

    def load_state_dict(self,state):
        r'''Overwrite parameters in place from `state`

        Raises
        ------
        *ShapeMismatch* if a parameter is missing or has a different shape.
        '''
        params = self.parameters()
        missing = [k for k in params if k not in state]
        if missing:
            raise ShapeMismatch('State lacks parameters: {}'.format(', '.join(missing)))
        for k,p in params.items():
            value = np.asarray(state[k])
            if value.shape != p.shape:
                raise ShapeMismatch('Parameter {} has shape {}, state has {}'.format(k,p.shape,value.shape))
            p.data[...] = value.astype(p.data.dtype)
