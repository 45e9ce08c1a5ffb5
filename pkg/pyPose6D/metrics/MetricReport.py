#!python
from __future__ import division,print_function
import json

import numpy as np


class MetricReport(object):
    r'''Per-class and mean pose accuracy

    **Description**

        One row per object class and one ``MEAN`` row (the unweighted
        average over the classes present). Columns:

        - ``auc_add``, ``auc_adds``, ``auc_add_s``
            AUC (up to 0.1 m) of ADD, ADD-S and ADD(-S)

        - ``ar_add_s_0.1m``
            Fraction of ADD(-S) errors below 0.1 m

        - ``ar_add_s_0.1d``
            Fraction of ADD(-S) errors below a tenth of the object diameter

        - ``count``
            Number of evaluated groundtruth instances (summed in ``MEAN``)

        Per-record errors are kept in :attr:`records` for inspection.

    Example
    -------
    .. code-block:: python

        report = pyPose6D.evaluate(records,symmetric_classes=[13,16])
        report.mean['auc_add_s']
        report.to_csv('report.csv')
        report.plot('report.svg')

    '''
    metric_columns = ['auc_add','auc_adds','auc_add_s','ar_add_s_0.1m','ar_add_s_0.1d']

    def __init__(self,per_class,records=None,names=None):
        self.per_class = per_class
        self.records = records
        self.names = dict(names or {})
        mean = per_class[self.metric_columns].mean(axis=0)
        mean['count'] = per_class['count'].sum()
        self.mean = mean

    def __repr__(self):
        return '<MetricReport classes:{} auc_add_s:{:.4f}>'.format(len(self.per_class),self.mean['auc_add_s'])

    def __getitem__(self,obj_id):
        if obj_id == 'MEAN':
            return self.mean
        return self.per_class.loc[obj_id]

    @property
    def classes(self):
        return list(self.per_class.index)

    def table(self):
        '''Per-class rows followed by the MEAN row, indexed by a string id'''
        table = self.per_class.copy()
        table.index = [str(i) for i in table.index]
        table.loc['MEAN'] = self.mean
        table['count'] = table['count'].astype(int)
        table.insert(0,'name',[self.names.get(int(i),'') if i != 'MEAN' else '' for i in table.index])
        table.index.name = 'obj_id'
        return table

    def to_csv(self,path):
        self.table().to_csv(path,float_format='%.6f')

    def to_dict(self):
        return {'per_class':{str(k):{c:float(v) for c,v in row.items()} for k,row in self.per_class.iterrows()},
                'mean':{c:float(v) for c,v in self.mean.items()},
                'names':{str(k):v for k,v in self.names.items()}}

    def to_json(self,path):
        with open(path,'w') as f:
            json.dump(self.to_dict(),f,indent=2,sort_keys=True)

    def plot(self,path,columns=('auc_adds','auc_add_s')):
        '''Grouped bar chart of per-class AUC written as SVG'''
        import matplotlib
        matplotlib.use('Agg')
        import matplotlib.pyplot as plt

        table = self.table()
        labels = list(table.index)
        x = np.arange(len(labels))
        width = 0.8/len(columns)
        fig,ax = plt.subplots(figsize=(max(6,0.5*len(labels)),4))
        for k,col in enumerate(columns):
            ax.bar(x+k*width-0.4+width/2,table[col].values,width,label=col)
        ax.set_xticks(x)
        ax.set_xticklabels(labels,rotation=90)
        ax.set_ylim(0,1)
        ax.set_ylabel('AUC')
        ax.legend()
        fig.tight_layout()
        fig.savefig(path,format='svg')
        plt.close(fig)
