#!python
r'''
The ``pypose6d`` command.

Every subcommand resolves its parameters with :class:`pyPose6D.util.RunConfig`
(defaults, then ``--config`` file, then flags), writes ``config.txt`` into its
output directory and returns an exit code: 0 on success, 1 when a
:class:`pyPose6D.Pose6DError` or an I/O error stops the run and 2 for usage
errors (reported by argparse).
'''
from __future__ import division,print_function
import argparse
import os
import sys
from collections import OrderedDict

import numpy as np
import pandas as pd

from pyPose6D.version import version
from pyPose6D.core.Errors import Pose6DError,InvalidArgument
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Representation import Representation
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.geometry.rotation import geodesic_distance
from pyPose6D.geometry.generate_ibb import keypoints_for
from pyPose6D.pnp.Correspondences import Correspondences
from pyPose6D.pnp.RansacConfig import RansacConfig
from pyPose6D.pnp.epnp import epnp
from pyPose6D.pnp.ransac_pnp import ransac_pnp
from pyPose6D.metrics.EvalRecord import EvalRecord
from pyPose6D.metrics.evaluate import evaluate
from pyPose6D.metrics.match_estimates import match_estimates
from pyPose6D.io.load_bop_scene import load_bop_scene
from pyPose6D.io.load_models import load_models
from pyPose6D.io.results import write_results,read_results
from pyPose6D.io.class_lists import load_symmetric,load_class_names
from pyPose6D.io.generate_scene import toy_camera,class_cuboid
from pyPose6D.io.SyntheticDataset import SyntheticDataset
from pyPose6D.models.RotEstConfig import RotEstConfig
from pyPose6D.models.ToyTransformerConfig import ToyTransformerConfig
from pyPose6D.models.TrainingConfig import TrainingConfig
from pyPose6D.models.Checkpoint import Checkpoint
from pyPose6D.models.make_rotest_dataset import make_rotest_dataset
from pyPose6D.models.train_rotest import train_rotest
from pyPose6D.models.train_toy import train_toy
from pyPose6D.losses.LossWeights import LossWeights
from pyPose6D.experiments.AblationConfig import AblationConfig
from pyPose6D.experiments.ablate import run_ablation,ablation_table
from pyPose6D.experiments.gradcheck import run_gradcheck
from pyPose6D.util.RunConfig import RunConfig,output_directory

CHECKPOINT = 'checkpoint.bin'
METRICS = 'metrics.csv'

VARIANTS = ('bb8','fps8','ibb32')


def _resolve(args,defaults):
    '''RunConfig of a subcommand: defaults < --config file < flags'''
    cfg = RunConfig(defaults)
    if getattr(args,'config',None):
        cfg.load(args.config)
    cfg.update(OrderedDict((k,getattr(args,k,None)) for k in defaults))
    return cfg


def _run_directory(cfg,command):
    out = output_directory(cfg.get('out'),command)
    cfg['out'] = out
    cfg.write(out)
    return out


def _seeds(text):
    return [int(s) for s in str(text).split(',') if s.strip()]


def gen_data(args):
    cfg = _resolve(args,OrderedDict([('seed',0),('samples',100),('max_objects',3),('classes',5),
                                     ('queries',20),('representation','ibb32'),('width',64),
                                     ('height',64),('out',None)]))
    out = _run_directory(cfg,'gen-data')
    dataset = SyntheticDataset.generate(cfg['seed'],cfg['samples'],cfg['classes'],cfg['max_objects'],
                                        cam=toy_camera(cfg['width'],cfg['height']),num_queries=cfg['queries'],
                                        representation=Representation.from_string(cfg['representation']),
                                        verbose=args.verbose)
    dataset.save(out)
    print('==> Wrote {} samples to {}'.format(len(dataset),out))
    return 0


def train_rotest_command(args):
    cfg = _resolve(args,OrderedDict([('seed',0),('samples',20000),('validation',1000),('epochs',10),
                                     ('batch_size',32),('lr',2e-4),('hidden',1024),('layers',6),
                                     ('dropout',0.5),('loss','points'),('representation','ibb32'),
                                     ('noise_px',1.0),('resume',''),('out',None)]))
    out = _run_directory(cfg,'train-rotest')
    rep = Representation.from_string(cfg['representation'])
    streams = RandomStreams(cfg['seed'])
    train_seed,val_seed = (int(s) for s in streams.stream('rotest/data').integers(0,2**31-1,2))
    keypoints,rotations,_ = make_rotest_dataset(cfg['samples'],train_seed,rep,cfg['noise_px'])
    validation = make_rotest_dataset(cfg['validation'],val_seed,rep,cfg['noise_px'])[:2] if cfg['validation'] else None

    config = RotEstConfig(rep,cfg['hidden'],cfg['layers'],cfg['dropout'],cfg['loss'])
    training = TrainingConfig(epochs=cfg['epochs'],batch_size=cfg['batch_size'],lr=cfg['lr'],
                              seed=cfg['seed'],verbose=args.verbose)
    resume = Checkpoint.load(cfg['resume']) if cfg['resume'] else None
    _,checkpoint,log = train_rotest((keypoints,rotations),config,training,validation,resume,
                                    log_path=os.path.join(out,METRICS))
    checkpoint.save(os.path.join(out,CHECKPOINT))
    if len(log):
        print('==> Median geodesic error {:.3f} deg'.format(log['median_geodesic_deg'].iloc[-1]))
    return 0


def train_toy_command(args):
    cfg = _resolve(args,OrderedDict([('data',''),('seed',0),('epochs',10),('batch_size',8),('lr',2e-4),
                                     ('dim',64),('encoder_layers',2),('decoder_layers',2),('heads',4),
                                     ('queries',20),('val_fraction',0.1),('resume',''),('out',None)]))
    if not cfg['data']:
        raise InvalidArgument('train-toy needs --data (a directory written by gen-data)')
    out = _run_directory(cfg,'train-toy')
    dataset = SyntheticDataset.load(cfg['data'])
    train,validation = dataset.split(1.0-cfg['val_fraction'])
    config = ToyTransformerConfig(dataset.num_classes,dim=cfg['dim'],encoder_layers=cfg['encoder_layers'],
                                  decoder_layers=cfg['decoder_layers'],heads=cfg['heads'],queries=cfg['queries'],
                                  representation=dataset.representation)
    training = TrainingConfig(epochs=cfg['epochs'],batch_size=cfg['batch_size'],lr=cfg['lr'],
                              seed=cfg['seed'],verbose=args.verbose)
    resume = Checkpoint.load(cfg['resume']) if cfg['resume'] else None
    _,checkpoint,log = train_toy(train,config,training,LossWeights(),
                                 validation=validation if len(validation) else None,resume=resume,
                                 log_path=os.path.join(out,METRICS))
    checkpoint.save(os.path.join(out,CHECKPOINT))
    if len(log):
        last = log.iloc[-1]
        print('==> Matched class accuracy {:.3f}, keypoint L1 {:.4f}'.format(
            last['matched_class_accuracy'],last['matched_keypoint_l1']))
    return 0


def _scene_directories(gt):
    if os.path.isfile(os.path.join(gt,'scene_gt.json')):
        return [gt]
    scenes = sorted(os.path.join(gt,d) for d in os.listdir(gt)
                    if os.path.isfile(os.path.join(gt,d,'scene_gt.json')))
    if not scenes:
        raise InvalidArgument('No BOP scene folders under {}'.format(gt))
    return scenes


def eval_command(args):
    cfg = _resolve(args,OrderedDict([('results',''),('gt',''),('models',''),('sym_list',''),
                                     ('class_names',''),('max_threshold',0.1),('out',None)]))
    for key in ('results','gt','models'):
        if not cfg[key]:
            raise InvalidArgument('eval needs --{}'.format(key))
    out = _run_directory(cfg,'eval')
    annotations = [a for scene in _scene_directories(cfg['gt']) for a in load_bop_scene(scene)]
    clouds,diameters = load_models(cfg['models'])
    symmetric = load_symmetric(cfg['sym_list'] or None)
    names = load_class_names(cfg['class_names']) if cfg['class_names'] else None
    records = match_estimates(read_results(cfg['results']),annotations)
    report = evaluate(records,symmetric,models=clouds,diameters=diameters,names=names,
                      max_threshold=cfg['max_threshold'])
    report.to_csv(os.path.join(out,'report.csv'))
    report.to_json(os.path.join(out,'report.json'))
    report.plot(os.path.join(out,'report.svg'))
    print(report.table().to_string(float_format=lambda x: '{:.4f}'.format(x)))
    return 0


def solve_pnp_command(args):
    cfg = _resolve(args,OrderedDict([('keypoints',''),('variant','ibb32'),('method','epnp'),('seed',0),
                                     ('samples',100),('noise_px',1.0),('iterations',200),('threshold',2.0),
                                     ('out',None)]))
    if cfg['variant'] not in VARIANTS:
        raise InvalidArgument('Unknown keypoint variant {}'.format(cfg['variant']))
    out = _run_directory(cfg,'solve-pnp')
    rep = Representation.from_string(cfg['variant'])
    cam = CameraIntrinsics.default()
    rotations = translations = None
    if cfg['keypoints']:
        rows = np.load(cfg['keypoints'])
        rows = rows.reshape(len(rows),-1)
    else:
        rows,rotations,translations = make_rotest_dataset(cfg['samples'],cfg['seed'],rep,cfg['noise_px'],cam=cam)
    model_kps = keypoints_for(rep,class_cuboid(0))
    size = np.array([cam.width,cam.height],dtype=np.float64)
    ransac = RansacConfig(cfg['iterations'],cfg['threshold'],seed=cfg['seed'])

    records,summary = [],[]
    for i,row in enumerate(rows):
        c = Correspondences(model_kps,row.reshape(-1,2)*size)
        pose = epnp(c,cam) if cfg['method'] == 'epnp' else ransac_pnp(c,cam,ransac)[0]
        records.append(EvalRecord(0,i,1,pose))
        if rotations is not None:
            summary.append(OrderedDict([('im_id',i),
                                        ('rotation_deg',np.degrees(geodesic_distance(rotations[i],pose.R))),
                                        ('translation_m',float(np.linalg.norm(translations[i]-pose.t)))]))
    write_results(records,os.path.join(out,'results.csv'))
    if summary:
        frame = pd.DataFrame(summary)
        frame.to_csv(os.path.join(out,'errors.csv'),index=False)
        print('==> Median rotation error {:.4f} deg, translation error {:.5f} m'.format(
            frame['rotation_deg'].median(),frame['translation_m'].median()))
    return 0


def ablate_command(args):
    cfg = _resolve(args,OrderedDict([('seeds','0,1,2,3,4'),('train_samples',5000),('test_samples',500),
                                     ('noise_px',1.0),('outlier_fraction',0.1),('outlier_px',15.0),
                                     ('epochs',10),('hidden',256),('layers',4),('out',None)]))
    out = _run_directory(cfg,'ablate')
    config = AblationConfig(seeds=_seeds(cfg['seeds']),train_samples=cfg['train_samples'],
                            test_samples=cfg['test_samples'],noise_px=cfg['noise_px'],
                            outlier_fraction=cfg['outlier_fraction'],outlier_px=cfg['outlier_px'],
                            rotest=RotEstConfig(hidden=cfg['hidden'],layers=cfg['layers'],dropout=0.0),
                            training=TrainingConfig(epochs=cfg['epochs'],batch_size=32,lr=1e-3))
    runs = run_ablation(config,verbose=args.verbose)
    table = ablation_table(runs)
    runs.to_csv(os.path.join(out,'runs.csv'),index=False,float_format='%.9g')
    table.to_csv(os.path.join(out,'table.csv'),index=False,float_format='%.9g')
    print(table.to_string(index=False))
    return 0


def gradcheck_command(args):
    cfg = _resolve(args,OrderedDict([('seed',0),('trials',100),('out',None)]))
    table = run_gradcheck(cfg['seed'],cfg['trials'],verbose=args.verbose)
    if cfg['out']:
        out = _run_directory(cfg,'gradcheck')
        table.to_csv(os.path.join(out,'gradcheck.csv'),index=False)
    print(table.to_string(index=False))
    failed = table[~table['passed']]
    if len(failed):
        print('gradcheck failed for: {}'.format(', '.join(failed['name'])),file=sys.stderr)
        return 1
    return 0


def dump_attention_command(args):
    cfg = _resolve(args,OrderedDict([('checkpoint',''),('data',''),('sample',0),('out',None)]))
    if not cfg['checkpoint'] or not cfg['data']:
        raise InvalidArgument('dump-attention needs --checkpoint and --data')
    out = _run_directory(cfg,'dump-attention')
    checkpoint = Checkpoint.load(cfg['checkpoint'])
    if checkpoint.kind != 'toy':
        raise InvalidArgument('dump-attention needs a toy transformer checkpoint, got {}'.format(checkpoint.kind))
    model = checkpoint.build_model().eval()
    dataset = SyntheticDataset.load(cfg['data'])
    if not (0 <= cfg['sample'] < len(dataset)):
        raise InvalidArgument('Sample {} outside dataset of {} samples'.format(cfg['sample'],len(dataset)))
    model(dataset[cfg['sample']].raster[None])
    for name,weights in model.attention_maps().items():
        if name.endswith('.self') and name.startswith('decoder'):
            continue
        path = os.path.join(out,name.replace('.','_')+'.csv')
        pd.DataFrame(weights[0]).to_csv(path,index=False,float_format='%.9g')
        print('==> Wrote {}'.format(path))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog='pypose6d',description='Set-prediction 6D object pose estimation')
    parser.add_argument('--version',action='version',version='pyPose6D {}'.format(version))
    sub = parser.add_subparsers(dest='command')

    def command(name,func,help):
        p = sub.add_parser(name,help=help)
        p.add_argument('--config',help='flat key=value file; flags override it')
        p.add_argument('--out',help='output directory (default $PYPOSE6D_OUTPUT_ROOT/<command>)')
        p.add_argument('--verbose',action='store_true')
        p.set_defaults(func=func)
        return p

    p = command('gen-data',gen_data,'generate a synthetic BOP-layout dataset')
    p.add_argument('--seed',type=int)
    p.add_argument('--samples',type=int)
    p.add_argument('--max-objects',dest='max_objects',type=int)
    p.add_argument('--classes',type=int)
    p.add_argument('--queries',type=int)
    p.add_argument('--representation',choices=VARIANTS)
    p.add_argument('--width',type=int)
    p.add_argument('--height',type=int)

    p = command('train-rotest',train_rotest_command,'train the keypoint to rotation regressor')
    p.add_argument('--seed',type=int)
    p.add_argument('--samples',type=int)
    p.add_argument('--validation',type=int)
    p.add_argument('--epochs',type=int)
    p.add_argument('--batch-size',dest='batch_size',type=int)
    p.add_argument('--lr',type=float)
    p.add_argument('--hidden',type=int)
    p.add_argument('--layers',type=int)
    p.add_argument('--dropout',type=float)
    p.add_argument('--loss',choices=RotEstConfig.losses)
    p.add_argument('--representation',choices=VARIANTS)
    p.add_argument('--noise-px',dest='noise_px',type=float)
    p.add_argument('--resume')

    p = command('train-toy',train_toy_command,'train the toy set-prediction transformer')
    p.add_argument('--data')
    p.add_argument('--seed',type=int)
    p.add_argument('--epochs',type=int)
    p.add_argument('--batch-size',dest='batch_size',type=int)
    p.add_argument('--lr',type=float)
    p.add_argument('--dim',type=int)
    p.add_argument('--encoder-layers',dest='encoder_layers',type=int)
    p.add_argument('--decoder-layers',dest='decoder_layers',type=int)
    p.add_argument('--heads',type=int)
    p.add_argument('--queries',type=int)
    p.add_argument('--val-fraction',dest='val_fraction',type=float)
    p.add_argument('--resume')

    p = command('eval',eval_command,'score a BOP results file')
    p.add_argument('--results')
    p.add_argument('--gt')
    p.add_argument('--models')
    p.add_argument('--sym-list',dest='sym_list')
    p.add_argument('--class-names',dest='class_names')
    p.add_argument('--max-threshold',dest='max_threshold',type=float)

    p = command('solve-pnp',solve_pnp_command,'recover poses from keypoints with EPnP')
    p.add_argument('--keypoints',help='.npy of normalized keypoint rows of the class 0 cuboid, matched to the '
                   '--variant layout on the default 640x480 camera; synthetic when omitted')
    p.add_argument('--variant',choices=VARIANTS)
    p.add_argument('--method',choices=('epnp','ransac'))
    p.add_argument('--seed',type=int)
    p.add_argument('--samples',type=int)
    p.add_argument('--noise-px',dest='noise_px',type=float)
    p.add_argument('--iterations',type=int)
    p.add_argument('--threshold',type=float)

    p = command('ablate',ablate_command,'keypoint representation by pose recovery grid')
    p.add_argument('--seeds',help='comma separated, e.g. 0,1,2')
    p.add_argument('--train-samples',dest='train_samples',type=int)
    p.add_argument('--test-samples',dest='test_samples',type=int)
    p.add_argument('--noise-px',dest='noise_px',type=float)
    p.add_argument('--outlier-fraction',dest='outlier_fraction',type=float)
    p.add_argument('--outlier-px',dest='outlier_px',type=float)
    p.add_argument('--epochs',type=int)
    p.add_argument('--hidden',type=int)
    p.add_argument('--layers',type=int)

    p = command('gradcheck',gradcheck_command,'finite-difference check of every op and loss')
    p.add_argument('--seed',type=int)
    p.add_argument('--trials',type=int)

    p = command('dump-attention',dump_attention_command,'write attention maps of one sample as CSV')
    p.add_argument('--checkpoint')
    p.add_argument('--data')
    p.add_argument('--sample',type=int)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args,'func',None) is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except Pose6DError as e:
        print('error: {}'.format(e),file=sys.stderr)
        return 1
    except (IOError,OSError) as e:
        print('error: {}'.format(e),file=sys.stderr)
        return 1
