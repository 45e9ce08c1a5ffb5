#!python
from __future__ import division,print_function
import os
import shutil
import tempfile
import unittest
import numpy as np
np.set_printoptions(precision=4)

from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Tensor import Tensor
from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import InvalidArgument,ShapeMismatch,ParseError
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.project import project
from pyPose6D.geometry.generate_ibb import keypoints_for
from pyPose6D.geometry.rotation import check_rotation
from pyPose6D.io.generate_scene import class_cuboid,toy_camera
from pyPose6D.io.SyntheticDataset import SyntheticDataset
from pyPose6D.models.layers import Linear,MLP
from pyPose6D.models.attention import MultiHeadAttention,sinusoidal_positions
from pyPose6D.models.RotEst import RotEst
from pyPose6D.models.RotEstConfig import RotEstConfig
from pyPose6D.models.ToyTransformer import ToyTransformer,patchify
from pyPose6D.models.ToyTransformerConfig import ToyTransformerConfig
from pyPose6D.models.TrainingConfig import TrainingConfig
from pyPose6D.models.Checkpoint import Checkpoint
from pyPose6D.models.make_rotest_dataset import make_rotest_dataset
from pyPose6D.models.train_rotest import train_rotest
from pyPose6D.models.train_toy import train_toy,LOG_COLUMNS


def small_rotest(representation='IBB32'):
    return RotEstConfig(representation,hidden=32,layers=3,dropout=0.0)


def small_toy(num_classes=2):
    return ToyTransformerConfig(num_classes,raster=(16,16),patch=4,dim=16,encoder_layers=1,decoder_layers=1,
                                heads=2,queries=3,head_hidden=16,feedforward=16,representation='BB8')


class layers_TestCase(unittest.TestCase):
    def test_linear(self):
        '''Does a Linear layer apply x W + b to single rows and batches?'''
        layer = Linear(3,2,np.random.default_rng(0))
        x = np.array([1.0,2.0,3.0])
        expected = x.dot(layer.weight.data) + layer.bias.data
        np.testing.assert_allclose(layer(x).data,expected,rtol=1e-6)
        np.testing.assert_allclose(layer(np.stack([x,x])).data,[expected,expected],rtol=1e-6)
        with self.assertRaises(ShapeMismatch):
            layer(np.ones(4))

    def test_parameters(self):
        '''Are parameters named by their position in the module tree?'''
        mlp = MLP([4,8,2],np.random.default_rng(0))
        names = list(mlp.parameters())
        self.assertEqual(names,['layers.0.weight','layers.0.bias','layers.1.weight','layers.1.bias'])
        self.assertEqual(mlp.num_parameters(),4*8+8+8*2+2)
        with self.assertRaises(InvalidArgument):
            MLP([4,2],np.random.default_rng(0),dropout=0.5)

    def test_state_dict(self):
        '''Can we copy parameters between modules and detect missing ones?'''
        a = MLP([4,8,2],np.random.default_rng(0))
        b = MLP([4,8,2],np.random.default_rng(1))
        b.load_state_dict(a.state_dict())
        x = np.ones((1,4))
        np.testing.assert_array_equal(a(x).data,b(x).data)
        state = a.state_dict()
        state.pop('layers.1.bias')
        with self.assertRaises(ShapeMismatch):
            b.load_state_dict(state)
        state = a.state_dict()
        state['layers.1.bias'] = np.zeros(3)
        with self.assertRaises(ShapeMismatch):
            b.load_state_dict(state)

    def test_attention_rows(self):
        '''Do the stored attention weights form distributions?'''
        attention = MultiHeadAttention(8,2,np.random.default_rng(0))
        rng = np.random.default_rng(1)
        q = rng.normal(size=(2,3,8))
        kv = rng.normal(size=(2,5,8))
        out = attention(q,kv,kv)
        self.assertEqual(out.shape,(2,3,8))
        self.assertEqual(attention.attention.shape,(2,3,5))
        np.testing.assert_allclose(attention.attention.sum(axis=-1),np.ones((2,3)),atol=1e-6)
        with self.assertRaises(ShapeMismatch):
            attention(q,kv,kv[:,:4])
        with self.assertRaises(InvalidArgument):
            MultiHeadAttention(8,3,rng)

    def test_positions(self):
        '''Are sine channels zero and cosine channels one at the origin?'''
        pos = sinusoidal_positions(2,3,4)
        self.assertEqual(pos.shape,(6,4))
        np.testing.assert_allclose(pos[0],[0,1,0,1])
        np.testing.assert_allclose(pos[5],[np.sin(1.0),np.cos(1.0),np.sin(2.0),np.cos(2.0)])
        with self.assertRaises(InvalidArgument):
            sinusoidal_positions(2,2,3)


class RotEst_TestCase(unittest.TestCase):
    def test_config(self):
        '''Does the config derive the input size and survive a dict?'''
        cfg = RotEstConfig('FPS8',hidden=64,layers=4)
        self.assertEqual(cfg.input_dim,16)
        self.assertEqual(cfg.sizes(),[16,64,64,64,6])
        self.assertEqual(RotEstConfig.from_dict(cfg.to_dict()).to_dict(),cfg.to_dict())
        for bad in (dict(hidden=0),dict(layers=1),dict(dropout=1.0),dict(loss='angle')):
            with self.assertRaises(InvalidArgument):
                RotEstConfig(**bad)

    def test_forward(self):
        '''Does RotEst map keypoint rows to rotations?'''
        model = RotEst(small_rotest('BB8'),RandomStreams(0)).eval()
        x = np.random.default_rng(0).uniform(size=(5,16))
        self.assertEqual(model(x).shape,(5,6))
        self.assertEqual(model(x[0]).shape,(1,6))
        for R in model.rotations(x):
            check_rotation(R,tol=1e-5)
        with self.assertRaises(ShapeMismatch):
            model(np.zeros((2,64)))

    def test_same_seed(self):
        '''Do equal seeds build equal networks?'''
        a = RotEst(small_rotest(),RandomStreams(3))
        b = RotEst(small_rotest(),RandomStreams(3))
        for (ka,va),(kb,vb) in zip(a.state_dict().items(),b.state_dict().items()):
            self.assertEqual(ka,kb)
            np.testing.assert_array_equal(va,vb)

    def test_dataset(self):
        '''Are noise-free training pairs exact projections?'''
        cam = CameraIntrinsics.default()
        kps,R,t = make_rotest_dataset(6,0,'IBB32',noise_px=0.0)
        self.assertEqual(kps.shape,(6,64))
        self.assertEqual(R.shape,(6,3,3))
        model_kps = keypoints_for(Representation.IBB32,class_cuboid(0))
        for row,Ri,ti in zip(kps,R,t):
            uv = project(model_kps,Pose(Ri,ti),cam).normalized(cam).points
            np.testing.assert_allclose(row,uv.ravel(),atol=1e-12)
            self.assertTrue(1.0 <= ti[2] <= 2.0)
        again = make_rotest_dataset(6,0,'IBB32',noise_px=0.0)[0]
        np.testing.assert_array_equal(kps,again)
        with self.assertRaises(InvalidArgument):
            make_rotest_dataset(3,0,noise_px=-1.0)


class train_rotest_TestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        kps,R,_ = make_rotest_dataset(48,1,'BB8',noise_px=0.5)
        self.data = (kps,R)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def training(self,epochs):
        return TrainingConfig(epochs=epochs,batch_size=16,lr=1e-3,lr_drop_fraction=None,seed=4)

    def test_log(self):
        '''Does training log one row per epoch and write it to disk?'''
        path = os.path.join(self.tmp,'metrics.csv')
        model,ckpt,log = train_rotest(self.data,small_rotest('BB8'),self.training(2),log_path=path)
        self.assertEqual(log['epoch'].tolist(),[0,1])
        self.assertEqual(log['step'].tolist(),[3,6])
        self.assertTrue(np.all(np.isfinite(log['loss'])))
        self.assertTrue(os.path.exists(path))
        self.assertEqual(ckpt.epoch,1)
        self.assertFalse(model.training)

    def test_rot6d_loss(self):
        '''Can the estimator be trained on the raw rotation code?'''
        cfg = RotEstConfig('BB8',hidden=32,layers=3,dropout=0.0,loss='rot6d')
        _,_,log = train_rotest(self.data,cfg,self.training(1))
        self.assertTrue(np.isfinite(log['loss'].iloc[0]))

    def test_resume(self):
        '''Does stopping and resuming reproduce an uninterrupted run?'''
        cfg = small_rotest('BB8')
        full,_,_ = train_rotest(self.data,cfg,self.training(2))
        _,first,_ = train_rotest(self.data,cfg,self.training(1))
        path = os.path.join(self.tmp,'checkpoint.bin')
        first.save(path)
        resumed,_,log = train_rotest(self.data,None,self.training(2),resume=Checkpoint.load(path))
        self.assertEqual(log['epoch'].tolist(),[1])
        for k,v in full.state_dict().items():
            np.testing.assert_array_equal(resumed.state_dict()[k],v)

    def test_mismatch(self):
        '''Are keypoint and rotation counts checked?'''
        with self.assertRaises(ShapeMismatch):
            train_rotest((self.data[0],self.data[1][:-1]),small_rotest('BB8'),self.training(1))


class Checkpoint_TestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.path = os.path.join(self.tmp,'checkpoint.bin')

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_roundtrip(self):
        '''Does a saved model come back with identical parameters?'''
        model = RotEst(small_rotest(),RandomStreams(0))
        streams = RandomStreams(5)
        streams.stream('shuffle').random(3)
        Checkpoint.from_model('rotest',model,TrainingConfig(),streams=streams,epoch=2).save(self.path)
        ckpt = Checkpoint.load(self.path)
        self.assertEqual(ckpt.kind,'rotest')
        self.assertEqual(ckpt.epoch,2)
        self.assertIsNone(ckpt.optimizer)
        rebuilt = ckpt.build_model()
        for k,v in model.state_dict().items():
            np.testing.assert_array_equal(rebuilt.state_dict()[k],v)
        fresh = RandomStreams(5)
        ckpt.restore(RotEst(small_rotest(),fresh),fresh)
        self.assertEqual(fresh.stream('shuffle').random(),streams.stream('shuffle').random())

    def test_restore_mismatch(self):
        '''Is a checkpoint refused by a model of another shape?'''
        ckpt = Checkpoint.from_model('rotest',RotEst(small_rotest()))
        with self.assertRaises(ShapeMismatch):
            ckpt.restore(RotEst(small_rotest('BB8')))

    def test_corrupt(self):
        '''Are foreign and truncated files reported as parse errors?'''
        with open(self.path,'wb') as f:
            f.write(b'not a checkpoint at all')
        with self.assertRaises(ParseError):
            Checkpoint.load(self.path)
        Checkpoint.from_model('rotest',RotEst(small_rotest())).save(self.path)
        with open(self.path,'rb') as f:
            raw = f.read()
        with open(self.path,'wb') as f:
            f.write(raw[:-100])
        with self.assertRaises(ParseError):
            Checkpoint.load(self.path)
        with self.assertRaises(ParseError):
            Checkpoint.load(os.path.join(self.tmp,'missing.bin'))
        with self.assertRaises(ValueError):
            Checkpoint('detr',{},{})


class ToyTransformer_TestCase(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.dataset = SyntheticDataset.generate(0,4,2,2,toy_camera(32,32),num_queries=3,
                                                representation=Representation.BB8)

    def test_config(self):
        '''Are inconsistent shapes refused?'''
        cfg = small_toy()
        self.assertEqual(cfg.grid,(4,4))
        self.assertEqual(cfg.tokens,16)
        self.assertEqual(ToyTransformerConfig.from_dict(cfg.to_dict()).to_dict(),cfg.to_dict())
        with self.assertRaises(InvalidArgument):
            ToyTransformerConfig(2,raster=(30,30),patch=4)
        with self.assertRaises(InvalidArgument):
            ToyTransformerConfig(2,dim=18,heads=4)
        with self.assertRaises(InvalidArgument):
            ToyTransformerConfig(0)

    def test_patchify(self):
        '''Are larger rasters block-averaged before patching?'''
        rasters = np.zeros((1,32,32,3))
        rasters[0,:2,:2] = 1.0
        patches = patchify(rasters,(16,16),4)
        self.assertEqual(patches.shape,(1,16,48))
        self.assertAlmostEqual(patches[0,0,0],1.0)
        self.assertAlmostEqual(patches[0,0].sum(),3.0)
        with self.assertRaises(ShapeMismatch):
            patchify(np.zeros((1,20,20,3)),(16,16),4)

    def test_forward(self):
        '''Does the model emit one prediction set per raster?'''
        model = ToyTransformer(small_toy(),RandomStreams(0)).eval()
        predictions = model(np.stack([s.raster for s in self.dataset]))
        self.assertEqual(len(predictions),4)
        p = predictions[0]
        self.assertEqual(p.logits.shape,(3,3))
        self.assertEqual(p.keypoints.shape,(3,16))
        self.assertEqual(p.rot6d.shape,(3,6))
        self.assertTrue(np.all((p.boxes.data > 0) & (p.boxes.data < 1)))
        self.assertTrue(np.all(p.translation.data[:,2] > 0))
        maps = model.attention_maps()
        self.assertEqual(list(maps),['encoder.0.self','decoder.0.self','decoder.0.cross'])
        self.assertEqual(maps['decoder.0.cross'].shape,(4,3,16))
        np.testing.assert_allclose(maps['encoder.0.self'].sum(axis=-1),np.ones((4,16)),atol=1e-6)

    def test_token_permutation(self):
        '''Does shuffling tokens together with their positions leave the decoder output unchanged?'''
        model = ToyTransformer(small_toy(),RandomStreams(0)).eval()
        c = model.config
        tokens = model.embed(patchify(np.stack([s.raster for s in self.dataset]),c.raster,c.patch)).data
        perm = np.random.default_rng(5).permutation(c.tokens)

        def run(x,positions):
            memory = Tensor(x)
            for layer in model.encoder:
                memory = layer(memory,positions)
            tgt = Tensor(np.zeros((x.shape[0],c.queries,c.dim)))
            for layer in model.decoder:
                tgt = layer(tgt,memory,positions,model.queries)
            return memory.data,tgt.data

        memory,out = run(tokens,model.positions)
        shuffled_memory,shuffled_out = run(tokens[:,perm],model.positions[perm])
        np.testing.assert_allclose(shuffled_memory,memory[:,perm],atol=1e-5)
        np.testing.assert_allclose(shuffled_out,out,atol=1e-5)

    def test_train(self):
        '''Does a short run log losses and resume from its checkpoint?'''
        training = TrainingConfig(epochs=1,batch_size=2,lr=1e-3,lr_drop_fraction=None,seed=0)
        model,ckpt,log = train_toy(self.dataset,small_toy(),training)
        self.assertEqual(list(log.columns),LOG_COLUMNS)
        self.assertEqual(len(log),1)
        self.assertEqual(int(log['step'].iloc[0]),2)
        self.assertTrue(np.isfinite(log['total'].iloc[0]))
        more = TrainingConfig(epochs=2,batch_size=2,lr=1e-3,lr_drop_fraction=None,seed=0)
        _,_,log = train_toy(self.dataset,None,more,resume=ckpt)
        self.assertEqual(log['epoch'].tolist(),[1])
        self.assertEqual(int(log['step'].iloc[0]),4)

    def test_too_many_objects(self):
        '''Are samples with more objects than queries refused?'''
        cfg = ToyTransformerConfig(2,raster=(16,16),patch=4,dim=16,heads=2,queries=1,head_hidden=16,
                                   feedforward=16,representation='BB8')
        crowded = [s for s in self.dataset if len(s) > 1]
        if not crowded:
            self.skipTest('no sample with two objects')
        with self.assertRaises(InvalidArgument):
            train_toy(crowded,cfg,TrainingConfig(epochs=1))


if __name__ == '__main__':
    for case in (layers_TestCase,RotEst_TestCase,train_rotest_TestCase,Checkpoint_TestCase,ToyTransformer_TestCase):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
