#include "tables_data.hpp"

namespace circdet::reference {

const char* const kEmbeddedTables = R"TBL(01,1,1,1.0000,1
01,2,1,1.0000,1
01,3,2,1.0000,3
01,4,3,1.0000,7
01,5,4,0.8000,15
01,6,9,0.7500,11
01,7,32,1.0000,23
01,8,45,0.6923,47
01,9,95,0.6597,47
01,10,275,0.6152,55
01,11,1458,1.0000,183
01,12,2240,0.6145,439
01,13,6561,0.6923,1527
01,14,19952,0.5759,751
01,15,131072,1.0000,2479
01,16,214245,0.5691,2935
01,17,755829,0.6784,2935
01,18,2994003,0.6505,9903
01,19,19531250,1.0000,22427
01,20,37579575,0.6010,28023
01,21,134534444,0.6560,45999
01,22,577397064,0.6178,117623
01,23,4353564672,1.0000,340831
01,24,10757577600,0.7060,843119
01,25,31495183733,0.5787,638287
01,26,154611524732,0.5744,957175
01,27,738139162166,0.5442,1796839
01,28,3124126889325,0.6101,5469423
01,29,11937232425585,0.6069,6774063
01,30,65455857159975,0.6271,37463883
01,31,562949953421312,1.0000,77446231
01,32,1395230053365015,0.6148,47828907
01,33,5687258414265018,0.6123,196303815
01,34,30551195956571643,0.5827,95151003
01,35,300189270593998242,1.0000,1324935477
01,36,809028975189744400,0.6309,1822895095
01,37,3198686446402685263,0.5760,430812063
01,38,19288701806345611347,0.5825,2846677239
01,39,103227456252120723684,0.5161,10313700815
01,40,529663503370085366373,0.5885,6269629671
01,41,2311393009109010944326,0.5638,26764629467
01,42,15469925980869995489631,0.6023,22992859983
01,43,162805498773679522226642,1.0000,92035379515
01,44,402826140168935435652453,0.5245,162368181483
01,45,2268175963362305735661143,0.6192,226394696439
01,46,12738408112895861486972391,0.5307,631304341299
01,47,158993694406781688266883072,1.0000,4626135339999
01,48,483776963047101724429782080,0.6179,924925407055
01,49,2226275734022433928055705600,0.5715,1588449170843
01,50,15940963431893953997118039375,0.5992,5455102172067
01,51,86343902346653136953496818019,0.4706,12463552538547
01,52,471252255596620483490068604560,0.5013,23418838481755
01,53,2670231923706326010918104225583,0.5492,12803059922743
pm1,1,1,1.0000,0
pm1,2,0,0.0000,0
pm1,3,1,1.0000,1
pm1,4,2,1.0000,1
pm1,5,3,1.0000,1
pm1,6,4,0.8000,1
pm1,7,8,0.6667,11
pm1,8,18,0.5625,11
pm1,9,27,0.4154,11
pm1,10,44,0.3056,11
pm1,11,267,0.5973,39
pm1,12,1024,0.7023,83
pm1,13,3645,1.0000,83
pm1,14,6144,0.6483,83
pm1,15,23859,0.6886,359
pm1,16,50176,0.3828,691
pm1,17,187377,0.4977,1643
pm1,18,531468,0.4770,2215
pm1,19,3302697,0.7176,9895
pm1,20,10616832,0.5436,6483
pm1,21,39337984,0.6291,67863
pm1,22,102546588,0.5000,21095
pm1,23,568833245,0.6087,72519
pm1,24,3073593600,0.7060,144791
pm1,25,8721488875,0.5724,108199
pm1,26,32998447572,0.6064,355463
pm1,27,164855413835,0.6125,604381
pm1,28,572108938470,0.4218,1289739
pm1,29,2490252810073,0.4863,1611219
pm1,30,10831449635712,0.5507,1680711
pm1,31,68045615234375,0.6520,6870231
pm1,32,282773291271138,0.5023,12817083
pm1,33,1592413932070703,0.7017,18635419
pm1,34,5234078743146888,0.5635,55100887
pm1,35,33374247484277975,0.6366,149009085
pm1,36,198124573871046186,0.6600,160340631
pm1,37,787413957917252603,0.6140,415804239
pm1,38,3195257068570067448,0.5754,829121815
pm1,39,22999238901574021485,0.6946,4737823097
pm1,40,117140061677844350646,0.5857,1446278811
pm1,41,536469708946538168543,0.5961,3001209959
pm1,42,2417648227367853639168,0.5897,19153917469
pm1,43,14611334654738350617599,0.5689,52222437727
pm1,44,65738632907943707712320,0.4038,20159598251
pm1,45,438910341492340511320163,0.5715,166482220965
pm1,46,2010768410464246499566152,0.5489,90422521191
pm1,47,12779930756727248097293989,0.5324,115099593371
pm1,48,100192997081088000000000000,0.6302,242235026743
pm1,49,408375323859124630659059549,0.5216,1416138805685
pm1,50,2152519997519833685106486024,0.5526,2380679727935
pm1,51,14098690136202107270366810369,0.5300,2716242515341
pm1,52,99371059004238555166801920000,0.5416,1758408815375
# checksum c7557ec4f5254ffb
)TBL";

}  // namespace circdet::reference
