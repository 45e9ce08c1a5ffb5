#!python
from __future__ import division,print_function
import json
from collections import OrderedDict

import numpy as np

from pyPose6D.core.AdamW import OptimizerState
from pyPose6D.core.Errors import ParseError,ShapeMismatch
from pyPose6D.io.atomic_write import atomic_write
from pyPose6D.models.RotEst import RotEst
from pyPose6D.models.RotEstConfig import RotEstConfig
from pyPose6D.models.ToyTransformer import ToyTransformer
from pyPose6D.models.ToyTransformerConfig import ToyTransformerConfig

MAGIC = b'PYP6DCKP'
FORMAT_VERSION = 1


class Checkpoint(object):
    r'''Trained parameters plus everything needed to resume training

    **Description**

        A checkpoint file starts with the 8-byte magic ``PYP6DCKP`` and a
        little-endian uint32 giving the length of a UTF-8 JSON manifest. The
        manifest holds the format version, the model kind and config, the
        training config, the epoch and optimizer hyperparameters, the
        positions of the random streams and one entry per blob (name, dtype,
        shape, byte offset). Blobs follow the manifest back to back:
        parameters as little-endian float32, optimizer moments as
        little-endian float64.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        ckpt = pyPose6D.Checkpoint.from_model('rotest',model,state=optimizer,streams=streams,epoch=3)
        ckpt.save('run/checkpoint.bin')

        ckpt = pyPose6D.Checkpoint.load('run/checkpoint.bin')
        model = ckpt.build_model()

    '''
    kinds = ('rotest','toy')

    def __init__(self,kind,config,parameters,training=None,optimizer=None,rng_state=None,epoch=0):
        if kind not in self.kinds:
            raise ValueError('Unknown checkpoint kind {}'.format(kind))
        self.kind = kind
        self.config = OrderedDict(config)
        self.parameters = OrderedDict(parameters)
        self.training = None if training is None else OrderedDict(training)
        self.optimizer = optimizer
        self.rng_state = rng_state or {}
        self.epoch = int(epoch)

    def __repr__(self):
        step = self.optimizer.step if self.optimizer is not None else 0
        return '<Checkpoint {} epoch:{} step:{} blobs:{}>'.format(self.kind,self.epoch,step,len(self.parameters))

    @classmethod
    def from_model(cls,kind,model,training=None,state=None,streams=None,epoch=0):
        return cls(kind,model.config.to_dict(),model.state_dict(),
                   training=None if training is None else training.to_dict(),
                   optimizer=state,rng_state=None if streams is None else streams.state(),epoch=epoch)

    def build_model(self,streams=None):
        '''Model of the stored kind and config holding the stored parameters'''
        if self.kind == 'rotest':
            model = RotEst(RotEstConfig.from_dict(self.config),streams)
        else:
            model = ToyTransformer(ToyTransformerConfig.from_dict(self.config),streams)
        model.load_state_dict(self.parameters)
        return model

    def _blobs(self):
        for name,value in self.parameters.items():
            yield 'param/'+name,np.ascontiguousarray(value,dtype='<f4')
        if self.optimizer is not None:
            for name in self.optimizer.m:
                yield 'adam_m/'+name,np.ascontiguousarray(self.optimizer.m[name],dtype='<f8')
                yield 'adam_v/'+name,np.ascontiguousarray(self.optimizer.v[name],dtype='<f8')

    def save(self,path):
        '''Write the checkpoint atomically to `path`'''
        entries = []
        payload = []
        offset = 0
        for name,blob in self._blobs():
            entries.append(OrderedDict([('name',name),('dtype',blob.dtype.str),('shape',list(blob.shape)),
                                        ('offset',offset),('nbytes',blob.nbytes)]))
            payload.append(blob.tobytes())
            offset += blob.nbytes
        manifest = OrderedDict([('format_version',FORMAT_VERSION),
                                ('kind',self.kind),
                                ('config',self.config),
                                ('training',self.training),
                                ('epoch',self.epoch),
                                ('optimizer',None if self.optimizer is None else
                                 OrderedDict([('step',self.optimizer.step)]+list(self.optimizer.hyperparameters().items()))),
                                ('rng_state',self.rng_state),
                                ('blobs',entries)])
        header = json.dumps(manifest).encode('utf-8')
        with atomic_write(path,'wb') as f:
            f.write(MAGIC)
            f.write(np.array([len(header)],dtype='<u4').tobytes())
            f.write(header)
            for chunk in payload:
                f.write(chunk)

    @classmethod
    def load(cls,path):
        r'''Read a checkpoint written by :meth:`save`

        Raises
        ------
        *ParseError* for a missing file, a wrong magic or version, a broken
        manifest or truncated blobs.
        '''
        try:
            with open(path,'rb') as f:
                raw = f.read()
        except (IOError,OSError) as e:
            raise ParseError('cannot read checkpoint: {}'.format(e),path=path)
        if raw[:len(MAGIC)] != MAGIC:
            raise ParseError('not a pyPose6D checkpoint (bad magic)',path=path)
        start = len(MAGIC)+4
        if len(raw) < start:
            raise ParseError('truncated header',path=path)
        length = int(np.frombuffer(raw[len(MAGIC):start],dtype='<u4')[0])
        try:
            manifest = json.loads(raw[start:start+length].decode('utf-8'),object_pairs_hook=OrderedDict)
        except ValueError as e:
            raise ParseError('broken manifest: {}'.format(e),path=path)
        if manifest.get('format_version') != FORMAT_VERSION:
            raise ParseError('unsupported checkpoint version {}'.format(manifest.get('format_version')),path=path)

        body = raw[start+length:]
        blobs = OrderedDict()
        for entry in manifest['blobs']:
            begin,end = entry['offset'],entry['offset']+entry['nbytes']
            if end > len(body):
                raise ParseError('blob {} is truncated'.format(entry['name']),path=path)
            blobs[entry['name']] = np.frombuffer(body[begin:end],dtype=entry['dtype']).reshape(entry['shape']).copy()

        parameters = OrderedDict((k[len('param/'):],v) for k,v in blobs.items() if k.startswith('param/'))
        optimizer = None
        if manifest['optimizer'] is not None:
            hyper = OrderedDict(manifest['optimizer'])
            step = hyper.pop('step')
            optimizer = OptimizerState(**hyper)
            optimizer.step = int(step)
            for name in parameters:
                if 'adam_m/'+name in blobs:
                    optimizer.m[name] = blobs['adam_m/'+name]
                    optimizer.v[name] = blobs['adam_v/'+name]
        return cls(manifest['kind'],manifest['config'],parameters,training=manifest['training'],
                   optimizer=optimizer,rng_state=manifest['rng_state'],epoch=manifest['epoch'])

    def restore(self,model,streams=None):
        r'''Load parameters into `model` and stream positions into `streams`

        Raises
        ------
        *ShapeMismatch* if the model does not have the stored parameters.
        '''
        if model.config.to_dict() != self.config:
            raise ShapeMismatch('Checkpoint config {} does not match model config {}'.format(
                dict(self.config),dict(model.config.to_dict())))
        model.load_state_dict(self.parameters)
        if streams is not None and self.rng_state:
            streams.restore(self.rng_state)
        return model
