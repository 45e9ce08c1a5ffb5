#!python
from __future__ import division,print_function
import os
import io
import json
from collections import OrderedDict

import numpy as np

from pyPose6D.core.Representation import Representation
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Errors import ParseError,InvalidArgument
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.io.atomic_write import atomic_write
from pyPose6D.io.generate_scene import generate_scene,class_cuboid,class_model,make_target
from pyPose6D.io.SyntheticSample import SyntheticSample
from pyPose6D.io.load_bop_scene import load_bop_scene,read_json
from pyPose6D.io.write_bop_scene import write_bop_scene
from pyPose6D.io.write_ply import write_ply
from pyPose6D.util.UnitConverter import default_converter

MANIFEST = 'manifest.json'
FORMAT_VERSION = 1
SCENE_ID = 0


class SyntheticDataset(object):
    r'''A seeded collection of synthetic scenes

    **Description**

        Sample ``i`` is generated from its own substream seed, so any sample
        can be regenerated on its own and the dataset does not depend on the
        order of generation.

        On disk the dataset uses the BOP layout so that the evaluation and
        ingestion code reads it like a real dataset:

        .. code-block:: none

            <root>/manifest.json              seeds and generator settings
            <root>/camera.json                image size and intrinsics
            <root>/models/obj_000001.ply      class cuboid clouds (mm)
            <root>/models/models_info.json    diameters (mm)
            <root>/train/000000/scene_gt.json
            <root>/train/000000/scene_camera.json
            <root>/train/000000/rgb/000000.npy  silhouette rasters

        The manifest carries no timestamps, so generating twice with the
        same flags produces byte-identical directories.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        data = pyPose6D.SyntheticDataset.generate(seed=7,samples=100,num_classes=5,max_objects=3)
        data.save('synthetic')
        same = pyPose6D.SyntheticDataset.load('synthetic')
        len(same)   # 100

    '''
    def __init__(self,samples,seed,num_classes,max_objects,cam,representation=Representation.IBB32):
        self.samples = list(samples)
        self.seed = int(seed)
        self.num_classes = int(num_classes)
        self.max_objects = int(max_objects)
        self.cam = cam
        self.representation = representation

    def __repr__(self):
        return '<SyntheticDataset seed:{} samples:{} classes:{} max_objects:{}>'.format(
            self.seed,len(self),self.num_classes,self.max_objects)

    def __len__(self):
        return len(self.samples)

    def __getitem__(self,index):
        return self.samples[index]

    def __iter__(self):
        return iter(self.samples)

    @staticmethod
    def sample_seed(seed,index):
        '''Seed of sample `index`, drawn from the ``'samples'`` substream'''
        rng = RandomStreams(seed).substream('samples',index)
        return int(rng.integers(0,2**31-1))

    @classmethod
    def generate(cls,seed,samples,num_classes,max_objects,cam=None,num_queries=None,
                 representation=Representation.IBB32,verbose=False):
        if samples < 0:
            raise InvalidArgument('Sample count must be >= 0, got {}'.format(samples))
        if cam is None:
            cam = CameraIntrinsics.default()
        out = []
        for i in range(samples):
            out.append(generate_scene(cls.sample_seed(seed,i),num_classes,max_objects,cam,
                                      num_queries,representation))
            if verbose and (i+1) % 100 == 0:
                print('==> Generated {} of {} samples'.format(i+1,samples))
        return cls(out,seed,num_classes,max_objects,cam,representation)

    def split(self,fraction):
        '''Two datasets holding the first and the remaining samples'''
        n = int(round(len(self)*fraction))
        head = SyntheticDataset(self.samples[:n],self.seed,self.num_classes,self.max_objects,self.cam,self.representation)
        tail = SyntheticDataset(self.samples[n:],self.seed,self.num_classes,self.max_objects,self.cam,self.representation)
        return head,tail

    def manifest(self):
        return OrderedDict([('format_version',FORMAT_VERSION),
                            ('seed',self.seed),
                            ('samples',len(self)),
                            ('num_classes',self.num_classes),
                            ('max_objects',self.max_objects),
                            ('representation',self.representation.name),
                            ('sample_seeds',[s.seed for s in self.samples])])

    def save(self,directory):
        '''Write the dataset under `directory` (see class description)'''
        uc = default_converter()
        scene_dir = os.path.join(directory,'train','{:06d}'.format(SCENE_ID))
        rgb_dir = os.path.join(scene_dir,'rgb')
        model_dir = os.path.join(directory,'models')
        for d in (rgb_dir,model_dir):
            if not os.path.isdir(d):
                os.makedirs(d)

        write_bop_scene(scene_dir,[s.to_annotation(SCENE_ID,i) for i,s in enumerate(self.samples)])
        for i,s in enumerate(self.samples):
            buf = io.BytesIO()
            np.save(buf,s.raster)
            with atomic_write(os.path.join(rgb_dir,'{:06d}.npy'.format(i)),'wb') as f:
                f.write(buf.getvalue())

        info = OrderedDict()
        for class_id in range(self.num_classes):
            obj_id = class_id+1
            write_ply(os.path.join(model_dir,'obj_{:06d}.ply'.format(obj_id)),
                      uc.toMillimeters(class_model(class_id)))
            info[str(obj_id)] = OrderedDict([('diameter',uc.toMillimeters(class_cuboid(class_id).diameter))])

        camera = self.cam.to_dict()
        for name,content in ((os.path.join(model_dir,'models_info.json'),info),
                             (os.path.join(directory,'camera.json'),camera),
                             (os.path.join(directory,MANIFEST),self.manifest())):
            with atomic_write(name) as f:
                json.dump(content,f,indent=2)

    @classmethod
    def load(cls,directory):
        r'''Read a dataset written by :meth:`save`

        Targets are rebuilt from the stored poses, so keypoints and boxes
        follow the representation recorded in the manifest.

        Raises
        ------
        *ParseError* when the manifest is missing or inconsistent with the
        scene files.
        '''
        path = os.path.join(directory,MANIFEST)
        if not os.path.exists(path):
            raise ParseError('no {} found'.format(MANIFEST),path=path)
        manifest = read_json(path)
        try:
            version = int(manifest['format_version'])
            representation = Representation.from_string(manifest['representation'])
            seeds = [int(s) for s in manifest['sample_seeds']]
            num_classes = int(manifest['num_classes'])
        except (KeyError,TypeError,ValueError) as e:
            raise ParseError('malformed manifest: {}'.format(e),path=path)
        if version != FORMAT_VERSION:
            raise ParseError('unsupported dataset format version {}'.format(version),path=path)

        scene_dir = os.path.join(directory,'train','{:06d}'.format(SCENE_ID))
        annotations = {a.im_id:a for a in load_bop_scene(scene_dir)} if seeds else {}
        cam = CameraIntrinsics.from_dict(read_json(os.path.join(directory,'camera.json')))
        samples = []
        for i,seed in enumerate(seeds):
            if i not in annotations:
                raise ParseError('image {} listed in the manifest has no annotation'.format(i),path=scene_dir)
            raster_path = os.path.join(scene_dir,'rgb','{:06d}.npy'.format(i))
            try:
                raster = np.load(raster_path)
            except (IOError,ValueError) as e:
                raise ParseError('cannot read raster: {}'.format(e),path=raster_path)
            targets = [make_target(obj_id-1,pose,cam,representation) for obj_id,pose in annotations[i].objects]
            samples.append(SyntheticSample(raster,targets,cam,seed))
        return cls(samples,manifest['seed'],num_classes,manifest['max_objects'],cam,representation)
