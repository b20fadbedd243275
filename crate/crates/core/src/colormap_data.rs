// Generated from matplotlib's 256-entry colormap tables.

pub(crate) const VIRIDIS: [[f32; 3]; 256] = [
    [0.26700401306152344, 0.004873999860137701, 0.3294149935245514],
    [0.26851001381874084, 0.009604999795556068, 0.3354269862174988],
    [0.2699440121650696, 0.014624999836087227, 0.34137898683547974],
    [0.27130499482154846, 0.01994200050830841, 0.3472689986228943],
    [0.27259400486946106, 0.02556299977004528, 0.3530929982662201],
    [0.2738089859485626, 0.03149700164794922, 0.3588530123233795],
    [0.2749519944190979, 0.037751998752355576, 0.36454299092292786],
    [0.2760219871997833, 0.04416700080037117, 0.37016400694847107],
    [0.2770180106163025, 0.05034400150179863, 0.3757149875164032],
    [0.2779409885406494, 0.05632400140166283, 0.3811909854412079],
    [0.27879101037979126, 0.06214499846100807, 0.38659200072288513],
    [0.2795659899711609, 0.06783600151538849, 0.39191699028015137],
    [0.28026700019836426, 0.07341700047254562, 0.3971630036830902],
    [0.280894011259079, 0.07890699803829193, 0.4023289978504181],
    [0.28144600987434387, 0.08432000130414963, 0.4074139893054962],
    [0.2819240093231201, 0.08966600149869919, 0.4124149978160858],
    [0.28232699632644653, 0.09495499730110168, 0.4173310101032257],
    [0.2826560139656067, 0.1001959964632988, 0.42215999960899353],
    [0.28290998935699463, 0.10539299994707108, 0.42690199613571167],
    [0.2830910086631775, 0.11055299639701843, 0.43155398964881897],
    [0.28319698572158813, 0.11568000167608261, 0.43611499667167664],
    [0.2832289934158325, 0.12077700346708298, 0.4405840039253235],
    [0.28318700194358826, 0.12584799528121948, 0.44495999813079834],
    [0.28307199478149414, 0.1308950036764145, 0.4492410123348236],
    [0.28288400173187256, 0.13592000305652618, 0.4534269869327545],
    [0.2826229929924011, 0.14092600345611572, 0.45751699805259705],
    [0.2822900116443634, 0.14591200649738312, 0.4615100026130676],
    [0.2818869948387146, 0.15088100731372833, 0.4654049873352051],
    [0.2814120054244995, 0.15583400428295135, 0.469200998544693],
    [0.2808679938316345, 0.16077099740505219, 0.4728989899158478],
    [0.280254989862442, 0.165692999958992, 0.476498007774353],
    [0.2795740067958832, 0.17059899866580963, 0.47999700903892517],
    [0.2788259983062744, 0.17549000680446625, 0.4833970069885254],
    [0.2780120074748993, 0.18036699295043945, 0.4866969883441925],
    [0.2771340012550354, 0.18522800505161285, 0.4898979961872101],
    [0.2761940062046051, 0.19007399678230286, 0.4930010139942169],
    [0.2751910090446472, 0.19490499794483185, 0.49600499868392944],
    [0.2741279900074005, 0.19972099363803864, 0.4989109933376312],
    [0.27300599217414856, 0.20452000200748444, 0.5017210245132446],
    [0.2718279957771301, 0.20930300652980804, 0.5044339895248413],
    [0.2705950140953064, 0.21406899392604828, 0.5070520043373108],
    [0.2693080008029938, 0.21881799399852753, 0.5095769762992859],
    [0.26796799898147583, 0.2235489934682846, 0.512008011341095],
    [0.2665799856185913, 0.2282620072364807, 0.5143489837646484],
    [0.2651450037956238, 0.23295600712299347, 0.5165989995002747],
    [0.26366299390792847, 0.23763099312782288, 0.5187619924545288],
    [0.2621380090713501, 0.24228599667549133, 0.5208370089530945],
    [0.2605710029602051, 0.24692200124263763, 0.5228279829025269],
    [0.25896498560905457, 0.2515369951725006, 0.5247359871864319],
    [0.2573220133781433, 0.25613000988960266, 0.5265629887580872],
    [0.2556450068950653, 0.2607029974460602, 0.5283120274543762],
    [0.2539350092411041, 0.2652539908885956, 0.5299829840660095],
    [0.25219398736953735, 0.26978299021720886, 0.5315790176391602],
    [0.2504250109195709, 0.2742899954319, 0.5331029891967773],
    [0.24862900376319885, 0.27877500653266907, 0.534555971622467],
    [0.24681100249290466, 0.2832370102405548, 0.5359410047531128],
    [0.24497200548648834, 0.28767499327659607, 0.5372599959373474],
    [0.24311299622058868, 0.2920919954776764, 0.5385159850120544],
    [0.24123699963092804, 0.2964850068092346, 0.5397089719772339],
    [0.2393459975719452, 0.30085501074790955, 0.5408440232276917],
    [0.23744100332260132, 0.30520200729370117, 0.5419210195541382],
    [0.23552599549293518, 0.3095270097255707, 0.5429440140724182],
    [0.23360300064086914, 0.3138279914855957, 0.5439140200614929],
    [0.23167400062084198, 0.3181059956550598, 0.5448340177536011],
    [0.2297389954328537, 0.3223609924316406, 0.5457059741020203],
    [0.22780199348926544, 0.3265939950942993, 0.5465319752693176],
    [0.2258629947900772, 0.3308050036430359, 0.5473139882087708],
    [0.22392499446868896, 0.33499398827552795, 0.5480530261993408],
    [0.2219890058040619, 0.3391610085964203, 0.5487520098686218],
    [0.22005699574947357, 0.3433069884777069, 0.5494130253791809],
    [0.21813000738620758, 0.3474319875240326, 0.5500379800796509],
    [0.2162099927663803, 0.35153499245643616, 0.5506269931793213],
    [0.21429799497127533, 0.35561901330947876, 0.5511839985847473],
    [0.21239499747753143, 0.35968300700187683, 0.5517100095748901],
    [0.2105029970407486, 0.36372700333595276, 0.5522059798240662],
    [0.208623006939888, 0.36775198578834534, 0.5526750087738037],
    [0.20675599575042725, 0.37175801396369934, 0.5531169772148132],
    [0.2049030065536499, 0.3757460117340088, 0.5535330176353455],
    [0.2030629962682724, 0.37971600890159607, 0.5539249777793884],
    [0.20123900473117828, 0.38367000222206116, 0.5542939901351929],
    [0.19943000376224518, 0.38760700821876526, 0.5546420216560364],
    [0.19763599336147308, 0.39152801036834717, 0.5549690127372742],
    [0.19585999846458435, 0.3954330086708069, 0.5552759766578674],
    [0.1941000074148178, 0.3993229866027832, 0.5555649995803833],
    [0.19235700368881226, 0.4031989872455597, 0.555836021900177],
    [0.19063100218772888, 0.40706101059913635, 0.5560889840126038],
    [0.18892300128936768, 0.4109100103378296, 0.5563259720802307],
    [0.18723100423812866, 0.4147459864616394, 0.5565469861030579],
    [0.18555599451065063, 0.41857001185417175, 0.5567529797554016],
    [0.18389800190925598, 0.42238301038742065, 0.5569440126419067],
    [0.18225599825382233, 0.4261839985847473, 0.5571200251579285],
    [0.18062900006771088, 0.4299750030040741, 0.5572819709777832],
    [0.1790190041065216, 0.4337559938430786, 0.5574300289154053],
    [0.17742300033569336, 0.43752700090408325, 0.5575649738311768],
    [0.17584100365638733, 0.4412899911403656, 0.5576850175857544],
    [0.1742739975452423, 0.44504401087760925, 0.5577920079231262],
    [0.17271900177001953, 0.4487909972667694, 0.5578849911689758],
    [0.1711760014295578, 0.45252999663352966, 0.5579649806022644],
    [0.1696459949016571, 0.4562619924545288, 0.5580300092697144],
    [0.16812600195407867, 0.459987998008728, 0.5580819845199585],
    [0.1666170060634613, 0.4637080132961273, 0.558118999004364],
    [0.16511699557304382, 0.4674229919910431, 0.5581409931182861],
    [0.16362500190734863, 0.4711329936981201, 0.5581480264663696],
    [0.16214199364185333, 0.474837988615036, 0.558139979839325],
    [0.16066500544548035, 0.47854000329971313, 0.5581150054931641],
    [0.1591939926147461, 0.4822370111942291, 0.5580729842185974],
    [0.15772899985313416, 0.48593199253082275, 0.5580130219459534],
    [0.15626999735832214, 0.4896239936351776, 0.5579360127449036],
    [0.15481500327587128, 0.4933130145072937, 0.5578399896621704],
    [0.15336400270462036, 0.4970000088214874, 0.5577239990234375],
    [0.15191799402236938, 0.5006849765777588, 0.5575870275497437],
    [0.15047599375247955, 0.5043690204620361, 0.5574300289154053],
    [0.14903900027275085, 0.5080509781837463, 0.5572500228881836],
    [0.1476069986820221, 0.5117329955101013, 0.5570489764213562],
    [0.14618000388145447, 0.5154129862785339, 0.5568230152130127],
    [0.14475899934768677, 0.5190929770469666, 0.5565720200538635],
    [0.1433430016040802, 0.522773027420044, 0.5562949776649475],
    [0.14193500578403473, 0.5264530181884766, 0.555990993976593],
    [0.14053599536418915, 0.530131995677948, 0.5556589961051941],
    [0.13914699852466583, 0.5338119864463806, 0.5552979707717896],
    [0.13776999711990356, 0.5374919772148132, 0.5549060106277466],
    [0.1364080011844635, 0.541172981262207, 0.5544829964637756],
    [0.13506600260734558, 0.5448529720306396, 0.5540289878845215],
    [0.13374300301074982, 0.5485349893569946, 0.5535410046577454],
    [0.13244399428367615, 0.5522159934043884, 0.5530179738998413],
    [0.13117200136184692, 0.5558990240097046, 0.5524590015411377],
    [0.12993299961090088, 0.559581995010376, 0.5518640279769897],
    [0.12872900068759918, 0.5632650256156921, 0.5512290000915527],
    [0.12756800651550293, 0.5669490098953247, 0.5505560040473938],
    [0.1264529973268509, 0.5706329941749573, 0.5498409867286682],
    [0.12539400160312653, 0.574317991733551, 0.5490859746932983],
    [0.12439499795436859, 0.5780019760131836, 0.5482869744300842],
    [0.12346299737691879, 0.5816869735717773, 0.5474449992179871],
    [0.12260600179433823, 0.5853710174560547, 0.5465570092201233],
    [0.1218309998512268, 0.5890550017356873, 0.5456230044364929],
    [0.1211479976773262, 0.5927389860153198, 0.5446410179138184],
    [0.12056499719619751, 0.596422016620636, 0.5436109900474548],
    [0.1200919970870018, 0.6001039743423462, 0.5425300002098083],
    [0.11973799765110016, 0.60378497838974, 0.5414000153541565],
    [0.11951199918985367, 0.6074640154838562, 0.5402179956436157],
    [0.11942300200462341, 0.61114102602005, 0.5389819741249084],
    [0.11948300153017044, 0.6148170232772827, 0.5376920104026794],
    [0.11969900131225586, 0.6184899806976318, 0.536346971988678],
    [0.12008100003004074, 0.6221609711647034, 0.5349460244178772],
    [0.12063799798488617, 0.6258280277252197, 0.5334879755973816],
    [0.12138000130653381, 0.6294919848442078, 0.5319730043411255],
    [0.12231200188398361, 0.6331530213356018, 0.5303980112075806],
    [0.12344399839639664, 0.6368089914321899, 0.5287629961967468],
    [0.12477999925613403, 0.6404610276222229, 0.527068018913269],
    [0.12632599472999573, 0.6441069841384888, 0.5253109931945801],
    [0.12808699905872345, 0.6477490067481995, 0.5234910249710083],
    [0.13006700575351715, 0.6513839960098267, 0.5216079950332642],
    [0.1322679966688156, 0.6550139784812927, 0.519661009311676],
    [0.1346919983625412, 0.6586359739303589, 0.5176489949226379],
    [0.13733899593353271, 0.6622520089149475, 0.5155709981918335],
    [0.14021000266075134, 0.6658589839935303, 0.5134270191192627],
    [0.1433030068874359, 0.6694589853286743, 0.5112149715423584],
    [0.14661599695682526, 0.6730499863624573, 0.5089359879493713],
    [0.15014800429344177, 0.676630973815918, 0.5065889954566956],
    [0.15389400720596313, 0.6802030205726624, 0.5041720271110535],
    [0.15785099565982819, 0.6837649941444397, 0.5016859769821167],
    [0.16201600432395935, 0.6873160004615784, 0.4991289973258972],
    [0.16638299822807312, 0.6908559799194336, 0.49650201201438904],
    [0.17094799876213074, 0.694383978843689, 0.4938029944896698],
    [0.17570699751377106, 0.6978999972343445, 0.49103298783302307],
    [0.18065300583839417, 0.7014020085334778, 0.4881890118122101],
    [0.1857829988002777, 0.70489102602005, 0.48527300357818604],
    [0.19109000265598297, 0.7083659768104553, 0.4822840094566345],
    [0.1965710073709488, 0.7118269801139832, 0.479220986366272],
    [0.20221899449825287, 0.7152720093727112, 0.47608399391174316],
    [0.20803000032901764, 0.7187010049819946, 0.4728730022907257],
    [0.21400000154972076, 0.7221140265464783, 0.4695880115032196],
    [0.2201240062713623, 0.725508987903595, 0.4662260115146637],
    [0.22639699280261993, 0.7288879752159119, 0.46278899908065796],
    [0.2328149974346161, 0.732246994972229, 0.4592770040035248],
    [0.23937399685382843, 0.735588014125824, 0.4556879997253418],
    [0.246069997549057, 0.7389100193977356, 0.45202401280403137],
    [0.2528989911079407, 0.7422109842300415, 0.44828400015830994],
    [0.2598569989204407, 0.7454919815063477, 0.4444670081138611],
    [0.26694101095199585, 0.7487509846687317, 0.4405730068683624],
    [0.27414900064468384, 0.7519879937171936, 0.43660101294517517],
    [0.2814770042896271, 0.7552030086517334, 0.4325520098209381],
    [0.2889209985733032, 0.7583940029144287, 0.42842599749565125],
    [0.2964789867401123, 0.7615609765052795, 0.42422300577163696],
    [0.30414798855781555, 0.7647039890289307, 0.4199430048465729],
    [0.3119249939918518, 0.7678220272064209, 0.415585994720459],
    [0.3198089897632599, 0.7709140181541443, 0.4111520051956177],
    [0.32779601216316223, 0.7739800214767456, 0.4066399931907654],
    [0.3358849883079529, 0.7770180106163025, 0.4020490050315857],
    [0.344074010848999, 0.7800289988517761, 0.3973810076713562],
    [0.3523600101470947, 0.7830110192298889, 0.3926360011100769],
    [0.36074098944664, 0.7859640121459961, 0.3878139853477478],
    [0.3692139983177185, 0.7888879776000977, 0.3829140067100525],
    [0.3777790069580078, 0.7917810082435608, 0.37793898582458496],
    [0.3864330053329468, 0.7946439981460571, 0.3728860020637512],
    [0.3951739966869354, 0.7974749803543091, 0.36775699257850647],
    [0.40400099754333496, 0.8002750277519226, 0.3625519871711731],
    [0.4129129946231842, 0.8030409812927246, 0.3572689890861511],
    [0.4219079911708832, 0.8057739734649658, 0.3519099950790405],
    [0.4309830069541931, 0.8084729909896851, 0.3464759886264801],
    [0.44013699889183044, 0.8111379742622375, 0.34096699953079224],
    [0.4493680000305176, 0.8137680292129517, 0.3353840112686157],
    [0.45867401361465454, 0.8163629770278931, 0.3297269940376282],
    [0.46805301308631897, 0.8189210295677185, 0.32399800419807434],
    [0.4775039851665497, 0.8214439749717712, 0.3181949853897095],
    [0.48702600598335266, 0.8239290118217468, 0.3123210072517395],
    [0.4966149926185608, 0.8263760209083557, 0.30637699365615845],
    [0.5062710046768188, 0.8287860155105591, 0.3003619909286499],
    [0.5159919857978821, 0.8311579823493958, 0.294279009103775],
    [0.5257760286331177, 0.8334910273551941, 0.28812700510025024],
    [0.5356209874153137, 0.8357849717140198, 0.2819080054759979],
    [0.545524001121521, 0.838038980960846, 0.275626003742218],
    [0.5554839968681335, 0.840254008769989, 0.2692809998989105],
    [0.5654979944229126, 0.8424299955368042, 0.2628769874572754],
    [0.5755630135536194, 0.8445659875869751, 0.2564150094985962],
    [0.585677981376648, 0.8466609716415405, 0.24989700317382812],
    [0.5958390235900879, 0.8487169742584229, 0.2433290034532547],
    [0.6060450077056885, 0.8507329821586609, 0.2367119938135147],
    [0.6162930130958557, 0.8527089953422546, 0.23005199432373047],
    [0.6265789866447449, 0.8546450138092041, 0.22335299849510193],
    [0.6369019746780396, 0.8565419912338257, 0.21661999821662903],
    [0.6472569704055786, 0.8583999872207642, 0.20986099541187286],
    [0.6576420068740845, 0.8602190017700195, 0.20308199524879456],
    [0.6680539846420288, 0.861998975276947, 0.19629299640655518],
    [0.6784890294075012, 0.8637419939041138, 0.1895029991865158],
    [0.6889439821243286, 0.865447998046875, 0.1827249974012375],
    [0.6994150280952454, 0.8671169877052307, 0.17597100138664246],
    [0.7098979949951172, 0.8687509894371033, 0.1692570000886917],
    [0.7203909754753113, 0.8703500032424927, 0.1626030057668686],
    [0.7308890223503113, 0.8719159960746765, 0.15602900087833405],
    [0.7413880228996277, 0.8734490275382996, 0.14956100285053253],
    [0.7518839836120605, 0.8749510049819946, 0.14322799444198608],
    [0.7623729705810547, 0.8764240145683289, 0.13706399500370026],
    [0.7728520035743713, 0.8778679966926575, 0.13110899925231934],
    [0.7833150029182434, 0.8792849779129028, 0.12540499866008759],
    [0.7937600016593933, 0.8806779980659485, 0.12000499665737152],
    [0.8041819930076599, 0.8820459842681885, 0.11496499925851822],
    [0.8145760297775269, 0.8833929896354675, 0.11034700274467468],
    [0.824940025806427, 0.8847200274467468, 0.10621699690818787],
    [0.8352699875831604, 0.8860290050506592, 0.10264600068330765],
    [0.8455610275268555, 0.8873220086097717, 0.09970200061798096],
    [0.8558099865913391, 0.8886010050773621, 0.09745199978351593],
    [0.8660129904747009, 0.8898680210113525, 0.09595300257205963],
    [0.8761680126190186, 0.8911250233650208, 0.09525000303983688],
    [0.8862709999084473, 0.8923739790916443, 0.09537400305271149],
    [0.8963199853897095, 0.8936160206794739, 0.09633500128984451],
    [0.9063109755516052, 0.8948550224304199, 0.09812500327825546],
    [0.9162420034408569, 0.8960909843444824, 0.10071700066328049],
    [0.9261059761047363, 0.8973299860954285, 0.1040709987282753],
    [0.9359040260314941, 0.8985700011253357, 0.10813099890947342],
    [0.945635974407196, 0.899815022945404, 0.11283800005912781],
    [0.955299973487854, 0.9010649919509888, 0.11812800168991089],
    [0.9648939967155457, 0.9023230075836182, 0.12394099682569504],
    [0.974416971206665, 0.9035900235176086, 0.13021500408649445],
    [0.9838680028915405, 0.9048669934272766, 0.1368969976902008],
    [0.9932479858398438, 0.9061570167541504, 0.14393599331378937],
];

pub(crate) const JET: [[f32; 3]; 256] = [
    [0.0, 0.0, 0.5],
    [0.0, 0.0, 0.5178253054618835],
    [0.0, 0.0, 0.5356506109237671],
    [0.0, 0.0, 0.5534759163856506],
    [0.0, 0.0, 0.5713012218475342],
    [0.0, 0.0, 0.5891265869140625],
    [0.0, 0.0, 0.606951892375946],
    [0.0, 0.0, 0.6247771978378296],
    [0.0, 0.0, 0.6426025032997131],
    [0.0, 0.0, 0.6604278087615967],
    [0.0, 0.0, 0.6782531142234802],
    [0.0, 0.0, 0.6960784196853638],
    [0.0, 0.0, 0.7139037251472473],
    [0.0, 0.0, 0.7317290306091309],
    [0.0, 0.0, 0.7495543956756592],
    [0.0, 0.0, 0.7673797011375427],
    [0.0, 0.0, 0.7852050065994263],
    [0.0, 0.0, 0.8030303120613098],
    [0.0, 0.0, 0.8208556175231934],
    [0.0, 0.0, 0.8386809229850769],
    [0.0, 0.0, 0.8565062284469604],
    [0.0, 0.0, 0.874331533908844],
    [0.0, 0.0, 0.8921568393707275],
    [0.0, 0.0, 0.9099822044372559],
    [0.0, 0.0, 0.9278075098991394],
    [0.0, 0.0, 0.945632815361023],
    [0.0, 0.0, 0.9634581208229065],
    [0.0, 0.0, 0.98128342628479],
    [0.0, 0.0, 0.9991087317466736],
    [0.0, 0.0, 1.0],
    [0.0, 0.0, 1.0],
    [0.0, 0.0, 1.0],
    [0.0, 0.0019607844296842813, 1.0],
    [0.0, 0.01764705963432789, 1.0],
    [0.0, 0.03333333507180214, 1.0],
    [0.0, 0.04901960864663124, 1.0],
    [0.0, 0.06470588594675064, 1.0],
    [0.0, 0.08039215952157974, 1.0],
    [0.0, 0.09607843309640884, 1.0],
    [0.0, 0.11176470667123795, 1.0],
    [0.0, 0.12745098769664764, 1.0],
    [0.0, 0.14313726127147675, 1.0],
    [0.0, 0.15882353484630585, 1.0],
    [0.0, 0.17450980842113495, 1.0],
    [0.0, 0.19019608199596405, 1.0],
    [0.0, 0.20588235557079315, 1.0],
    [0.0, 0.22156862914562225, 1.0],
    [0.0, 0.23725490272045135, 1.0],
    [0.0, 0.25294119119644165, 1.0],
    [0.0, 0.26862746477127075, 1.0],
    [0.0, 0.28431373834609985, 1.0],
    [0.0, 0.30000001192092896, 1.0],
    [0.0, 0.31568628549575806, 1.0],
    [0.0, 0.33137255907058716, 1.0],
    [0.0, 0.34705883264541626, 1.0],
    [0.0, 0.36274510622024536, 1.0],
    [0.0, 0.37843137979507446, 1.0],
    [0.0, 0.39411765336990356, 1.0],
    [0.0, 0.40980392694473267, 1.0],
    [0.0, 0.42549020051956177, 1.0],
    [0.0, 0.44117647409439087, 1.0],
    [0.0, 0.45686274766921997, 1.0],
    [0.0, 0.4725490212440491, 1.0],
    [0.0, 0.4882352948188782, 1.0],
    [0.0, 0.5039215683937073, 1.0],
    [0.0, 0.5196078419685364, 1.0],
    [0.0, 0.5352941155433655, 1.0],
    [0.0, 0.5509803891181946, 1.0],
    [0.0, 0.5666666626930237, 1.0],
    [0.0, 0.5823529362678528, 1.0],
    [0.0, 0.5980392098426819, 1.0],
    [0.0, 0.613725483417511, 1.0],
    [0.0, 0.6294117569923401, 1.0],
    [0.0, 0.6450980305671692, 1.0],
    [0.0, 0.6607843041419983, 1.0],
    [0.0, 0.6764705777168274, 1.0],
    [0.0, 0.6921568512916565, 1.0],
    [0.0, 0.7078431248664856, 1.0],
    [0.0, 0.7235293984413147, 1.0],
    [0.0, 0.7392156720161438, 1.0],
    [0.0, 0.7549019455909729, 1.0],
    [0.0, 0.770588219165802, 1.0],
    [0.0, 0.7862744927406311, 1.0],
    [0.0, 0.8019607663154602, 1.0],
    [0.0, 0.8176470398902893, 1.0],
    [0.0, 0.8333333134651184, 1.0],
    [0.0, 0.8490195870399475, 1.0],
    [0.0, 0.8647058606147766, 0.9962049126625061],
    [0.0, 0.8803921341896057, 0.9835547208786011],
    [0.0, 0.8960784077644348, 0.9709044694900513],
    [0.009487666189670563, 0.9117646813392639, 0.9582542777061462],
    [0.02213788777589798, 0.927450954914093, 0.9456040263175964],
    [0.0347881093621254, 0.9431372284889221, 0.9329538345336914],
    [0.047438330948352814, 0.9588235020637512, 0.9203035831451416],
    [0.06008855253458023, 0.9745097756385803, 0.9076533913612366],
    [0.07273877412080765, 0.9901960492134094, 0.8950031399726868],
    [0.08538899570703506, 1.0, 0.8823529481887817],
    [0.09803921729326248, 1.0, 0.8697026968002319],
    [0.1106894388794899, 1.0, 0.8570525050163269],
    [0.12333966046571732, 1.0, 0.8444022536277771],
    [0.13598987460136414, 1.0, 0.8317520618438721],
    [0.14864009618759155, 1.0, 0.8191018104553223],
    [0.16129031777381897, 1.0, 0.8064516186714172],
    [0.1739405393600464, 1.0, 0.7938013672828674],
    [0.1865907609462738, 1.0, 0.7811511754989624],
    [0.19924098253250122, 1.0, 0.7685009241104126],
    [0.21189120411872864, 1.0, 0.7558507323265076],
    [0.22454142570495605, 1.0, 0.7432004809379578],
    [0.23719164729118347, 1.0, 0.7305502891540527],
    [0.2498418688774109, 1.0, 0.7179000377655029],
    [0.2624920904636383, 1.0, 0.7052498459815979],
    [0.2751423120498657, 1.0, 0.6925995945930481],
    [0.28779253363609314, 1.0, 0.6799494028091431],
    [0.30044275522232056, 1.0, 0.6672991514205933],
    [0.313092976808548, 1.0, 0.6546489596366882],
    [0.3257431983947754, 1.0, 0.6419987082481384],
    [0.3383934199810028, 1.0, 0.6293485164642334],
    [0.3510436415672302, 1.0, 0.6166982650756836],
    [0.36369386315345764, 1.0, 0.6040480732917786],
    [0.37634408473968506, 1.0, 0.5913978219032288],
    [0.3889943063259125, 1.0, 0.5787476301193237],
    [0.4016445279121399, 1.0, 0.5660973787307739],
    [0.4142947494983673, 1.0, 0.5534471869468689],
    [0.4269449710845947, 1.0, 0.5407969355583191],
    [0.43959519267082214, 1.0, 0.5281467437744141],
    [0.45224541425704956, 1.0, 0.5154964923858643],
    [0.464895635843277, 1.0, 0.5028463006019592],
    [0.4775458574295044, 1.0, 0.4901960790157318],
    [0.4901960790157318, 1.0, 0.4775458574295044],
    [0.5028463006019592, 1.0, 0.464895635843277],
    [0.5154964923858643, 1.0, 0.45224541425704956],
    [0.5281467437744141, 1.0, 0.43959519267082214],
    [0.5407969355583191, 1.0, 0.4269449710845947],
    [0.5534471869468689, 1.0, 0.4142947494983673],
    [0.5660973787307739, 1.0, 0.4016445279121399],
    [0.5787476301193237, 1.0, 0.3889943063259125],
    [0.5913978219032288, 1.0, 0.37634408473968506],
    [0.6040480732917786, 1.0, 0.36369386315345764],
    [0.6166982650756836, 1.0, 0.3510436415672302],
    [0.6293485164642334, 1.0, 0.3383934199810028],
    [0.6419987082481384, 1.0, 0.3257431983947754],
    [0.6546489596366882, 1.0, 0.313092976808548],
    [0.6672991514205933, 1.0, 0.30044275522232056],
    [0.6799494028091431, 1.0, 0.28779253363609314],
    [0.6925995945930481, 1.0, 0.2751423120498657],
    [0.7052498459815979, 1.0, 0.2624920904636383],
    [0.7179000377655029, 1.0, 0.2498418688774109],
    [0.7305502891540527, 1.0, 0.23719164729118347],
    [0.7432004809379578, 1.0, 0.22454142570495605],
    [0.7558507323265076, 1.0, 0.21189120411872864],
    [0.7685009241104126, 1.0, 0.19924098253250122],
    [0.7811511754989624, 1.0, 0.1865907609462738],
    [0.7938013672828674, 1.0, 0.1739405393600464],
    [0.8064516186714172, 1.0, 0.16129031777381897],
    [0.8191018104553223, 1.0, 0.14864009618759155],
    [0.8317520618438721, 1.0, 0.13598987460136414],
    [0.8444022536277771, 1.0, 0.12333966046571732],
    [0.8570525050163269, 1.0, 0.1106894388794899],
    [0.8697026968002319, 1.0, 0.09803921729326248],
    [0.8823529481887817, 1.0, 0.08538899570703506],
    [0.8950031399726868, 1.0, 0.07273877412080765],
    [0.9076533913612366, 1.0, 0.06008855253458023],
    [0.9203035831451416, 1.0, 0.047438330948352814],
    [0.9329538345336914, 1.0, 0.0347881093621254],
    [0.9456040263175964, 0.9883805513381958, 0.02213788777589798],
    [0.9582542777061462, 0.9738562107086182, 0.009487666189670563],
    [0.9709044694900513, 0.9593318700790405, 0.0],
    [0.9835547208786011, 0.9448075294494629, 0.0],
    [0.9962049126625061, 0.93028324842453, 0.0],
    [1.0, 0.9157589077949524, 0.0],
    [1.0, 0.9012345671653748, 0.0],
    [1.0, 0.8867102265357971, 0.0],
    [1.0, 0.8721858859062195, 0.0],
    [1.0, 0.8576616048812866, 0.0],
    [1.0, 0.843137264251709, 0.0],
    [1.0, 0.8286129236221313, 0.0],
    [1.0, 0.8140885829925537, 0.0],
    [1.0, 0.7995642423629761, 0.0],
    [1.0, 0.7850399613380432, 0.0],
    [1.0, 0.7705156207084656, 0.0],
    [1.0, 0.7559912800788879, 0.0],
    [1.0, 0.7414669394493103, 0.0],
    [1.0, 0.7269426584243774, 0.0],
    [1.0, 0.7124183177947998, 0.0],
    [1.0, 0.6978939771652222, 0.0],
    [1.0, 0.6833696365356445, 0.0],
    [1.0, 0.6688452959060669, 0.0],
    [1.0, 0.654321014881134, 0.0],
    [1.0, 0.6397966742515564, 0.0],
    [1.0, 0.6252723336219788, 0.0],
    [1.0, 0.6107479929924011, 0.0],
    [1.0, 0.5962236523628235, 0.0],
    [1.0, 0.5816993713378906, 0.0],
    [1.0, 0.567175030708313, 0.0],
    [1.0, 0.5526506900787354, 0.0],
    [1.0, 0.5381263494491577, 0.0],
    [1.0, 0.5236020088195801, 0.0],
    [1.0, 0.5090777277946472, 0.0],
    [1.0, 0.4945533871650696, 0.0],
    [1.0, 0.48002904653549194, 0.0],
    [1.0, 0.4655047059059143, 0.0],
    [1.0, 0.45098039507865906, 0.0],
    [1.0, 0.4364560544490814, 0.0],
    [1.0, 0.42193174362182617, 0.0],
    [1.0, 0.40740740299224854, 0.0],
    [1.0, 0.3928830921649933, 0.0],
    [1.0, 0.37835875153541565, 0.0],
    [1.0, 0.363834410905838, 0.0],
    [1.0, 0.34931010007858276, 0.0],
    [1.0, 0.3347857594490051, 0.0],
    [1.0, 0.3202614486217499, 0.0],
    [1.0, 0.30573710799217224, 0.0],
    [1.0, 0.2912127673625946, 0.0],
    [1.0, 0.27668845653533936, 0.0],
    [1.0, 0.2621641159057617, 0.0],
    [1.0, 0.24763979017734528, 0.0],
    [1.0, 0.23311546444892883, 0.0],
    [1.0, 0.2185911387205124, 0.0],
    [1.0, 0.20406681299209595, 0.0],
    [1.0, 0.1895424872636795, 0.0],
    [1.0, 0.17501816153526306, 0.0],
    [1.0, 0.16049382090568542, 0.0],
    [1.0, 0.14596949517726898, 0.0],
    [1.0, 0.13144516944885254, 0.0],
    [1.0, 0.1169208437204361, 0.0],
    [1.0, 0.10239651054143906, 0.0],
    [1.0, 0.08787218481302261, 0.0],
    [0.9991087317466736, 0.07334785908460617, 0.0],
    [0.98128342628479, 0.05882352963089943, 0.0],
    [0.9634581208229065, 0.04429920017719269, 0.0],
    [0.945632815361023, 0.029774872586131096, 0.0],
    [0.9278075098991394, 0.015250544995069504, 0.0],
    [0.9099822044372559, 0.0007262164144776762, 0.0],
    [0.8921568393707275, 0.0, 0.0],
    [0.874331533908844, 0.0, 0.0],
    [0.8565062284469604, 0.0, 0.0],
    [0.8386809229850769, 0.0, 0.0],
    [0.8208556175231934, 0.0, 0.0],
    [0.8030303120613098, 0.0, 0.0],
    [0.7852050065994263, 0.0, 0.0],
    [0.7673797011375427, 0.0, 0.0],
    [0.7495543956756592, 0.0, 0.0],
    [0.7317290306091309, 0.0, 0.0],
    [0.7139037251472473, 0.0, 0.0],
    [0.6960784196853638, 0.0, 0.0],
    [0.6782531142234802, 0.0, 0.0],
    [0.6604278087615967, 0.0, 0.0],
    [0.6426025032997131, 0.0, 0.0],
    [0.6247771978378296, 0.0, 0.0],
    [0.606951892375946, 0.0, 0.0],
    [0.5891265869140625, 0.0, 0.0],
    [0.5713012218475342, 0.0, 0.0],
    [0.5534759163856506, 0.0, 0.0],
    [0.5356506109237671, 0.0, 0.0],
    [0.5178253054618835, 0.0, 0.0],
    [0.5, 0.0, 0.0],
];

pub(crate) const HSV: [[f32; 3]; 256] = [
    [1.0, 0.0, 0.0],
    [1.0, 0.023161787539720535, 0.0],
    [1.0, 0.04632357507944107, 0.0],
    [1.0, 0.0694853663444519, 0.0],
    [1.0, 0.09264715015888214, 0.0],
    [1.0, 0.11580894142389297, 0.0],
    [1.0, 0.1389707326889038, 0.0],
    [1.0, 0.16213251650333405, 0.0],
    [1.0, 0.18529430031776428, 0.0],
    [1.0, 0.20845608413219452, 0.0],
    [1.0, 0.23161788284778595, 0.0],
    [1.0, 0.2547796666622162, 0.0],
    [1.0, 0.2779414653778076, 0.0],
    [1.0, 0.30110323429107666, 0.0],
    [1.0, 0.3242650330066681, 0.0],
    [1.0, 0.3474268317222595, 0.0],
    [1.0, 0.37058860063552856, 0.0],
    [1.0, 0.39375039935112, 0.0],
    [1.0, 0.41691216826438904, 0.0],
    [1.0, 0.44007396697998047, 0.0],
    [1.0, 0.4632357656955719, 0.0],
    [1.0, 0.48639753460884094, 0.0],
    [1.0, 0.5095593333244324, 0.0],
    [1.0, 0.5327211022377014, 0.0],
    [1.0, 0.5558829307556152, 0.0],
    [1.0, 0.5790446996688843, 0.0],
    [1.0, 0.6022064685821533, 0.0],
    [1.0, 0.6253682971000671, 0.0],
    [1.0, 0.6485300660133362, 0.0],
    [1.0, 0.6716918349266052, 0.0],
    [1.0, 0.694853663444519, 0.0],
    [1.0, 0.7180154323577881, 0.0],
    [1.0, 0.7411772012710571, 0.0],
    [1.0, 0.7643389701843262, 0.0],
    [1.0, 0.78750079870224, 0.0],
    [1.0, 0.810662567615509, 0.0],
    [1.0, 0.8338243365287781, 0.0],
    [1.0, 0.8569861650466919, 0.0],
    [1.0, 0.8801479339599609, 0.0],
    [1.0, 0.90330970287323, 0.0],
    [1.0, 0.9264715313911438, 0.0],
    [0.9959555864334106, 0.9455888867378235, 0.0],
    [0.9882349967956543, 0.9610300660133362, 0.0],
    [0.9805143475532532, 0.9764712452888489, 0.0],
    [0.9727937579154968, 0.9919124245643616, 0.0],
    [0.9577195644378662, 1.0, 0.0],
    [0.9345577359199524, 1.0, 0.0],
    [0.9113959670066833, 1.0, 0.0],
    [0.8882341980934143, 1.0, 0.0],
    [0.8650723695755005, 1.0, 0.0],
    [0.8419106006622314, 1.0, 0.0],
    [0.8187488317489624, 1.0, 0.0],
    [0.7955870032310486, 1.0, 0.0],
    [0.7724252343177795, 1.0, 0.0],
    [0.7492634654045105, 1.0, 0.0],
    [0.7261016964912415, 1.0, 0.0],
    [0.7029398679733276, 1.0, 0.0],
    [0.6797780990600586, 1.0, 0.0],
    [0.6566163301467896, 1.0, 0.0],
    [0.6334545016288757, 1.0, 0.0],
    [0.6102927327156067, 1.0, 0.0],
    [0.5871309638023376, 1.0, 0.0],
    [0.5639691352844238, 1.0, 0.0],
    [0.5408073663711548, 1.0, 0.0],
    [0.5176455974578857, 1.0, 0.0],
    [0.4944837987422943, 1.0, 0.0],
    [0.4713220000267029, 1.0, 0.0],
    [0.44816020131111145, 1.0, 0.0],
    [0.4249984323978424, 1.0, 0.0],
    [0.401836633682251, 1.0, 0.0],
    [0.37867483496665955, 1.0, 0.0],
    [0.3555130660533905, 1.0, 0.0],
    [0.3323512673377991, 1.0, 0.0],
    [0.30918949842453003, 1.0, 0.0],
    [0.2860276997089386, 1.0, 0.0],
    [0.26286590099334717, 1.0, 0.0],
    [0.23970411717891693, 1.0, 0.0],
    [0.2165423333644867, 1.0, 0.0],
    [0.19338054955005646, 1.0, 0.0],
    [0.17021876573562622, 1.0, 0.0],
    [0.1470569670200348, 1.0, 0.0],
    [0.12389518320560455, 1.0, 0.0],
    [0.10073339194059372, 1.0, 0.0],
    [0.07757160812616348, 1.0, 0.0],
    [0.05440982058644295, 1.0, 0.0],
    [0.03124934434890747, 1.0, 1.3125013538228814e-06],
    [0.023528747260570526, 1.0, 0.015442504547536373],
    [0.01580815203487873, 1.0, 0.03088369593024254],
    [0.00808755587786436, 1.0, 0.04632488638162613],
    [0.00036695992457680404, 1.0, 0.06176608055830002],
    [0.0, 1.0, 0.08456076681613922],
    [0.0, 1.0, 0.10772240906953812],
    [0.0, 1.0, 0.130884051322937],
    [0.0, 1.0, 0.1540457010269165],
    [0.0, 1.0, 0.1772073358297348],
    [0.0, 1.0, 0.2003689855337143],
    [0.0, 1.0, 0.2235306203365326],
    [0.0, 1.0, 0.24669227004051208],
    [0.0, 1.0, 0.2698538899421692],
    [0.0, 1.0, 0.2930155396461487],
    [0.0, 1.0, 0.3161771893501282],
    [0.0, 1.0, 0.33933883905410767],
    [0.0, 1.0, 0.36250045895576477],
    [0.0, 1.0, 0.38566210865974426],
    [0.0, 1.0, 0.40882375836372375],
    [0.0, 1.0, 0.43198540806770325],
    [0.0, 1.0, 0.45514702796936035],
    [0.0, 1.0, 0.47830867767333984],
    [0.0, 1.0, 0.5014703273773193],
    [0.0, 1.0, 0.5246319770812988],
    [0.0, 1.0, 0.5477936267852783],
    [0.0, 1.0, 0.5709552764892578],
    [0.0, 1.0, 0.5941168665885925],
    [0.0, 1.0, 0.617278516292572],
    [0.0, 1.0, 0.6404401659965515],
    [0.0, 1.0, 0.663601815700531],
    [0.0, 1.0, 0.6867634654045105],
    [0.0, 1.0, 0.70992511510849],
    [0.0, 1.0, 0.7330867648124695],
    [0.0, 1.0, 0.756248414516449],
    [0.0, 1.0, 0.7794100046157837],
    [0.0, 1.0, 0.8025716543197632],
    [0.0, 1.0, 0.8257333040237427],
    [0.0, 1.0, 0.8488949537277222],
    [0.0, 1.0, 0.8720566034317017],
    [0.0, 1.0, 0.8952182531356812],
    [0.0, 1.0, 0.9183799028396606],
    [0.0, 1.0, 0.9415414929389954],
    [0.0, 1.0, 0.9647031426429749],
    [0.0, 1.0, 0.9878647923469543],
    [0.0, 0.9889734983444214, 1.0],
    [0.0, 0.9658116698265076, 1.0],
    [0.0, 0.9426499009132385, 1.0],
    [0.0, 0.9194881319999695, 1.0],
    [0.0, 0.8963263034820557, 1.0],
    [0.0, 0.8731645345687866, 1.0],
    [0.0, 0.8500027656555176, 1.0],
    [0.0, 0.8268409967422485, 1.0],
    [0.0, 0.8036791682243347, 1.0],
    [0.0, 0.7805173993110657, 1.0],
    [0.0, 0.7573556303977966, 1.0],
    [0.0, 0.7341938018798828, 1.0],
    [0.0, 0.7110320329666138, 1.0],
    [0.0, 0.6878702640533447, 1.0],
    [0.0, 0.6647084355354309, 1.0],
    [0.0, 0.6415466666221619, 1.0],
    [0.0, 0.6183848977088928, 1.0],
    [0.0, 0.595223069190979, 1.0],
    [0.0, 0.57206130027771, 1.0],
    [0.0, 0.5488995313644409, 1.0],
    [0.0, 0.5257377028465271, 1.0],
    [0.0, 0.5025759339332581, 1.0],
    [0.0, 0.479414165019989, 1.0],
    [0.0, 0.4562523663043976, 1.0],
    [0.0, 0.43309056758880615, 1.0],
    [0.0, 0.4099287986755371, 1.0],
    [0.0, 0.3867669999599457, 1.0],
    [0.0, 0.36360520124435425, 1.0],
    [0.0, 0.3404434323310852, 1.0],
    [0.0, 0.3172816336154938, 1.0],
    [0.0, 0.29411983489990234, 1.0],
    [0.0, 0.2709580659866333, 1.0],
    [0.0, 0.24779626727104187, 1.0],
    [0.0, 0.22463448345661163, 1.0],
    [0.0, 0.2014726996421814, 1.0],
    [0.0, 0.17831090092658997, 1.0],
    [0.0, 0.15514911711215973, 1.0],
    [0.0, 0.1319873332977295, 1.0],
    [0.0, 0.10882554203271866, 1.0],
    [0.0, 0.08566375821828842, 1.0],
    [0.0, 0.06250196695327759, 1.0],
    [0.007719939574599266, 0.04706012085080147, 1.0],
    [0.015440535731613636, 0.03161893039941788, 1.0],
    [0.023161131888628006, 0.016177736222743988, 1.0],
    [0.0308817271143198, 0.0007365448400378227, 1.0],
    [0.05330697074532509, 0.0, 1.0],
    [0.07646875828504562, 0.0, 1.0],
    [0.09963054955005646, 0.0, 1.0],
    [0.1227923333644867, 0.0, 1.0],
    [0.14595411717891693, 0.0, 1.0],
    [0.16911591589450836, 0.0, 1.0],
    [0.1922776997089386, 0.0, 1.0],
    [0.21543948352336884, 0.0, 1.0],
    [0.23860126733779907, 0.0, 1.0],
    [0.2617630660533905, 0.0, 1.0],
    [0.28492483496665955, 0.0, 1.0],
    [0.308086633682251, 0.0, 1.0],
    [0.3312484323978424, 0.0, 1.0],
    [0.35441020131111145, 0.0, 1.0],
    [0.3775720000267029, 0.0, 1.0],
    [0.4007337987422943, 0.0, 1.0],
    [0.42389556765556335, 0.0, 1.0],
    [0.4470573663711548, 0.0, 1.0],
    [0.4702191650867462, 0.0, 1.0],
    [0.49338093400001526, 0.0, 1.0],
    [0.5165427327156067, 0.0, 1.0],
    [0.5397045016288757, 0.0, 1.0],
    [0.5628663301467896, 0.0, 1.0],
    [0.5860280990600586, 0.0, 1.0],
    [0.6091898679733276, 0.0, 1.0],
    [0.6323516964912415, 0.0, 1.0],
    [0.6555134654045105, 0.0, 1.0],
    [0.6786752343177795, 0.0, 1.0],
    [0.7018370032310486, 0.0, 1.0],
    [0.7249988317489624, 0.0, 1.0],
    [0.7481606006622314, 0.0, 1.0],
    [0.7713223695755005, 0.0, 1.0],
    [0.7944841980934143, 0.0, 1.0],
    [0.8176459670066833, 0.0, 1.0],
    [0.8408077359199524, 0.0, 1.0],
    [0.8639695644378662, 0.0, 1.0],
    [0.8871313333511353, 0.0, 1.0],
    [0.9102931022644043, 0.0, 1.0],
    [0.9334549307823181, 0.0, 1.0],
    [0.9566166996955872, 0.0, 1.0],
    [0.972426176071167, 0.0, 0.992647647857666],
    [0.9801467657089233, 0.0, 0.9772064685821533],
    [0.9878673553466797, 0.0, 0.9617652893066406],
    [0.995587944984436, 0.0, 0.9463241100311279],
    [1.0, 0.0, 0.9275743365287781],
    [1.0, 0.0, 0.904412567615509],
    [1.0, 0.0, 0.88125079870224],
    [1.0, 0.0, 0.8580889701843262],
    [1.0, 0.0, 0.8349272012710571],
    [1.0, 0.0, 0.8117654323577881],
    [1.0, 0.0, 0.788603663444519],
    [1.0, 0.0, 0.7654418349266052],
    [1.0, 0.0, 0.7422800660133362],
    [1.0, 0.0, 0.7191182971000671],
    [1.0, 0.0, 0.6959564685821533],
    [1.0, 0.0, 0.6727946996688843],
    [1.0, 0.0, 0.6496329307556152],
    [1.0, 0.0, 0.6264711022377014],
    [1.0, 0.0, 0.6033093333244324],
    [1.0, 0.0, 0.5801475644111633],
    [1.0, 0.0, 0.5569857358932495],
    [1.0, 0.0, 0.5338239669799805],
    [1.0, 0.0, 0.5106621980667114],
    [1.0, 0.0, 0.48750039935112],
    [1.0, 0.0, 0.46433860063552856],
    [1.0, 0.0, 0.4411768317222595],
    [1.0, 0.0, 0.4180150330066681],
    [1.0, 0.0, 0.39485323429107666],
    [1.0, 0.0, 0.3716914653778076],
    [1.0, 0.0, 0.3485296666622162],
    [1.0, 0.0, 0.32536786794662476],
    [1.0, 0.0, 0.3022060990333557],
    [1.0, 0.0, 0.2790443003177643],
    [1.0, 0.0, 0.25588250160217285],
    [1.0, 0.0, 0.2327207326889038],
    [1.0, 0.0, 0.20955893397331238],
    [1.0, 0.0, 0.18639715015888214],
    [1.0, 0.0, 0.1632353663444519],
    [1.0, 0.0, 0.14007358253002167],
    [1.0, 0.0, 0.11691179126501083],
    [1.0, 0.0, 0.09375],
];

pub(crate) const COPPER: [[f32; 3]; 256] = [
    [0.0, 0.0, 0.0],
    [0.004844289738684893, 0.003063529497012496, 0.0019509803969413042],
    [0.009688579477369785, 0.006127058994024992, 0.0039019607938826084],
    [0.01453286875039339, 0.009190588258206844, 0.005852940957993269],
    [0.01937715895473957, 0.012254117988049984, 0.007803921587765217],
    [0.024221448227763176, 0.015317646786570549, 0.009754901751875877],
    [0.02906573750078678, 0.01838117651641369, 0.011705881915986538],
    [0.03391002491116524, 0.02144470624625683, 0.013656863011419773],
    [0.03875431790947914, 0.024508235976099968, 0.015607843175530434],
    [0.04359860718250275, 0.02757176384329796, 0.01755882427096367],
    [0.04844289645552635, 0.030635293573141098, 0.019509803503751755],
    [0.05328718572854996, 0.03369882330298424, 0.02146078459918499],
    [0.05813147500157356, 0.03676235303282738, 0.023411763831973076],
    [0.06297576427459717, 0.03982588276267052, 0.02536274492740631],
    [0.06782004982233047, 0.04288941249251366, 0.027313726022839546],
    [0.07266434282064438, 0.045952942222356796, 0.029264705255627632],
    [0.07750863581895828, 0.049016471952199936, 0.031215686351060867],
    [0.08235292136669159, 0.052080001682043076, 0.03316666558384895],
    [0.0871972143650055, 0.05514352768659592, 0.03511764854192734],
    [0.0920414999127388, 0.058207057416439056, 0.037068627774715424],
    [0.0968857929110527, 0.061270587146282196, 0.03901960700750351],
    [0.10173007845878601, 0.06433411687612534, 0.040970589965581894],
    [0.10657437145709991, 0.06739764660596848, 0.04292156919836998],
    [0.11141865700483322, 0.07046117633581161, 0.044872548431158066],
    [0.11626295000314713, 0.07352470606565475, 0.04682352766394615],
    [0.12110723555088043, 0.0765882357954979, 0.048774510622024536],
    [0.12595152854919434, 0.07965176552534103, 0.05072548985481262],
    [0.13079582154750824, 0.08271529525518417, 0.05267646908760071],
    [0.13564009964466095, 0.08577882498502731, 0.05462745204567909],
    [0.14048439264297485, 0.08884235471487045, 0.05657843127846718],
    [0.14532868564128876, 0.09190588444471359, 0.058529410511255264],
    [0.15017297863960266, 0.09496941417455673, 0.06048039346933365],
    [0.15501727163791656, 0.09803294390439987, 0.062431372702121735],
    [0.15986154973506927, 0.10109647363424301, 0.06438235193490982],
    [0.16470584273338318, 0.10416000336408615, 0.0663333311676979],
    [0.16955013573169708, 0.10722353309392929, 0.06828431040048599],
    [0.174394428730011, 0.11028705537319183, 0.07023529708385468],
    [0.1792387068271637, 0.11335058510303497, 0.07218627631664276],
    [0.1840829998254776, 0.11641411483287811, 0.07413725554943085],
    [0.1889272928237915, 0.11947764456272125, 0.07608823478221893],
    [0.1937715858221054, 0.12254117429256439, 0.07803921401500702],
    [0.19861586391925812, 0.12560470402240753, 0.0799901932477951],
    [0.20346015691757202, 0.12866823375225067, 0.08194117993116379],
    [0.20830444991588593, 0.1317317634820938, 0.08389215916395187],
    [0.21314874291419983, 0.13479529321193695, 0.08584313839673996],
    [0.21799302101135254, 0.1378588229417801, 0.08779411762952805],
    [0.22283731400966644, 0.14092235267162323, 0.08974509686231613],
    [0.22768160700798035, 0.14398588240146637, 0.09169607609510422],
    [0.23252590000629425, 0.1470494121313095, 0.0936470553278923],
    [0.23737019300460815, 0.15011294186115265, 0.09559804201126099],
    [0.24221447110176086, 0.1531764715909958, 0.09754902124404907],
    [0.24705876410007477, 0.15624000132083893, 0.09950000047683716],
    [0.25190305709838867, 0.15930353105068207, 0.10145097970962524],
    [0.2567473351955414, 0.1623670607805252, 0.10340195894241333],
    [0.2615916430950165, 0.16543059051036835, 0.10535293817520142],
    [0.2664359211921692, 0.1684941202402115, 0.1073039248585701],
    [0.2712801992893219, 0.17155764997005463, 0.10925490409135818],
    [0.276124507188797, 0.17462117969989777, 0.11120588332414627],
    [0.2809687852859497, 0.1776847094297409, 0.11315686255693436],
    [0.2858130931854248, 0.18074823915958405, 0.11510784178972244],
    [0.2906573712825775, 0.18381176888942719, 0.11705882102251053],
    [0.2955016493797302, 0.18687529861927032, 0.11900980025529861],
    [0.3003459572792053, 0.18993882834911346, 0.1209607869386673],
    [0.30519023537635803, 0.1930023580789566, 0.12291176617145538],
    [0.31003454327583313, 0.19606588780879974, 0.12486274540424347],
    [0.31487882137298584, 0.19912941753864288, 0.12681372463703156],
    [0.31972309947013855, 0.20219294726848602, 0.12876470386981964],
    [0.32456740736961365, 0.20525647699832916, 0.13071568310260773],
    [0.32941168546676636, 0.2083200067281723, 0.1326666623353958],
    [0.33425596356391907, 0.21138353645801544, 0.1346176415681839],
    [0.33910027146339417, 0.21444706618785858, 0.13656862080097198],
    [0.3439445495605469, 0.21751058101654053, 0.13851961493492126],
    [0.348788857460022, 0.22057411074638367, 0.14047059416770935],
    [0.3536331355571747, 0.2236376404762268, 0.14242157340049744],
    [0.3584774136543274, 0.22670117020606995, 0.14437255263328552],
    [0.3633217215538025, 0.22976469993591309, 0.1463235318660736],
    [0.3681659996509552, 0.23282822966575623, 0.1482745110988617],
    [0.3730103075504303, 0.23589175939559937, 0.15022549033164978],
    [0.377854585647583, 0.2389552891254425, 0.15217646956443787],
    [0.3826988637447357, 0.24201881885528564, 0.15412744879722595],
    [0.3875431716442108, 0.24508234858512878, 0.15607842803001404],
    [0.3923874497413635, 0.24814587831497192, 0.15802940726280212],
    [0.39723172783851624, 0.25120940804481506, 0.1599803864955902],
    [0.40207603573799133, 0.2542729377746582, 0.1619313657283783],
    [0.40692031383514404, 0.25733646750450134, 0.16388235986232758],
    [0.41176462173461914, 0.2603999972343445, 0.16583333909511566],
    [0.41660889983177185, 0.2634635269641876, 0.16778431832790375],
    [0.42145317792892456, 0.26652705669403076, 0.16973529756069183],
    [0.42629748582839966, 0.2695905864238739, 0.17168627679347992],
    [0.43114176392555237, 0.27265411615371704, 0.173637256026268],
    [0.4359860420227051, 0.2757176458835602, 0.1755882352590561],
    [0.4408303499221802, 0.2787811756134033, 0.17753921449184418],
    [0.4456746280193329, 0.28184470534324646, 0.17949019372463226],
    [0.450518935918808, 0.2849082350730896, 0.18144117295742035],
    [0.4553632140159607, 0.28797176480293274, 0.18339215219020844],
    [0.4602074921131134, 0.2910352945327759, 0.18534313142299652],
    [0.4650518000125885, 0.294098824262619, 0.1872941106557846],
    [0.4698960781097412, 0.29716235399246216, 0.1892451047897339],
    [0.4747403860092163, 0.3002258837223053, 0.19119608402252197],
    [0.479584664106369, 0.30328941345214844, 0.19314706325531006],
    [0.48442894220352173, 0.3063529431819916, 0.19509804248809814],
    [0.4892732501029968, 0.3094164729118347, 0.19704902172088623],
    [0.49411752820014954, 0.31248000264167786, 0.19900000095367432],
    [0.49896180629730225, 0.315543532371521, 0.2009509801864624],
    [0.5038061141967773, 0.31860706210136414, 0.2029019594192505],
    [0.5086504220962524, 0.3216705918312073, 0.20485293865203857],
    [0.5134946703910828, 0.3247341215610504, 0.20680391788482666],
    [0.5183389782905579, 0.32779765129089355, 0.20875489711761475],
    [0.523183286190033, 0.3308611810207367, 0.21070587635040283],
    [0.5280275344848633, 0.33392471075057983, 0.21265685558319092],
    [0.5328718423843384, 0.336988240480423, 0.2146078497171402],
    [0.5377161502838135, 0.3400517702102661, 0.21655882894992828],
    [0.5425603985786438, 0.34311529994010925, 0.21850980818271637],
    [0.5474047064781189, 0.3461788296699524, 0.22046078741550446],
    [0.552249014377594, 0.34924235939979553, 0.22241176664829254],
    [0.5570933222770691, 0.35230588912963867, 0.22436274588108063],
    [0.5619375705718994, 0.3553694188594818, 0.2263137251138687],
    [0.5667818784713745, 0.35843294858932495, 0.2282647043466568],
    [0.5716261863708496, 0.3614964783191681, 0.23021568357944489],
    [0.5764704346656799, 0.36456000804901123, 0.23216666281223297],
    [0.581314742565155, 0.36762353777885437, 0.23411764204502106],
    [0.5861590504646301, 0.3706870675086975, 0.23606862127780914],
    [0.5910032987594604, 0.37375059723854065, 0.23801960051059723],
    [0.5958476066589355, 0.3768141269683838, 0.2399705946445465],
    [0.6006919145584106, 0.37987765669822693, 0.2419215738773346],
    [0.605536162853241, 0.38294118642807007, 0.24387255311012268],
    [0.6103804707527161, 0.3860047161579132, 0.24582353234291077],
    [0.6152247786521912, 0.38906824588775635, 0.24777451157569885],
    [0.6200690865516663, 0.3921317756175995, 0.24972549080848694],
    [0.6249133348464966, 0.3951953053474426, 0.251676470041275],
    [0.6297576427459717, 0.39825883507728577, 0.2536274492740631],
    [0.6346019506454468, 0.4013223648071289, 0.2555784285068512],
    [0.6394461989402771, 0.40438589453697205, 0.2575294077396393],
    [0.6442905068397522, 0.4074494242668152, 0.25948038697242737],
    [0.6491348147392273, 0.4105129539966583, 0.26143136620521545],
    [0.6539790630340576, 0.41357648372650146, 0.26338234543800354],
    [0.6588233709335327, 0.4166400134563446, 0.2653333246707916],
    [0.6636676788330078, 0.41970354318618774, 0.2672843039035797],
    [0.6685119271278381, 0.4227670729160309, 0.2692352831363678],
    [0.6733562350273132, 0.425830602645874, 0.2711862623691559],
    [0.6782005429267883, 0.42889413237571716, 0.27313724160194397],
    [0.6830448508262634, 0.4319576323032379, 0.27508822083473206],
    [0.6878890991210938, 0.43502116203308105, 0.27703922986984253],
    [0.6927334070205688, 0.4380846917629242, 0.2789902091026306],
    [0.697577714920044, 0.44114822149276733, 0.2809411883354187],
    [0.7024219632148743, 0.4442117512226105, 0.2828921675682068],
    [0.7072662711143494, 0.4472752809524536, 0.2848431468009949],
    [0.7121105790138245, 0.45033881068229675, 0.28679412603378296],
    [0.7169548273086548, 0.4534023404121399, 0.28874510526657104],
    [0.7217991352081299, 0.45646587014198303, 0.29069608449935913],
    [0.726643443107605, 0.45952939987182617, 0.2926470637321472],
    [0.7314876914024353, 0.4625929296016693, 0.2945980429649353],
    [0.7363319993019104, 0.46565645933151245, 0.2965490221977234],
    [0.7411763072013855, 0.4687199890613556, 0.2985000014305115],
    [0.7460206151008606, 0.47178351879119873, 0.30045098066329956],
    [0.7508648633956909, 0.47484704852104187, 0.30240195989608765],
    [0.755709171295166, 0.477910578250885, 0.30435293912887573],
    [0.7605534791946411, 0.48097410798072815, 0.3063039183616638],
    [0.7653977274894714, 0.4840376377105713, 0.3082548975944519],
    [0.7702420353889465, 0.48710116744041443, 0.31020587682724],
    [0.7750863432884216, 0.49016469717025757, 0.3121568560600281],
    [0.779930591583252, 0.4932282269001007, 0.31410783529281616],
    [0.784774899482727, 0.49629175662994385, 0.31605881452560425],
    [0.7896192073822021, 0.499355286359787, 0.31800979375839233],
    [0.7944634556770325, 0.5024188160896301, 0.3199607729911804],
    [0.7993077635765076, 0.5054823756217957, 0.3219117522239685],
    [0.8041520714759827, 0.5085458755493164, 0.3238627314567566],
    [0.808996319770813, 0.5116094350814819, 0.3258137106895447],
    [0.8138406276702881, 0.5146729350090027, 0.32776471972465515],
    [0.8186849355697632, 0.5177364945411682, 0.32971569895744324],
    [0.8235292434692383, 0.520799994468689, 0.3316666781902313],
    [0.8283734917640686, 0.5238635540008545, 0.3336176574230194],
    [0.8332177996635437, 0.5269270539283752, 0.3355686366558075],
    [0.8380621075630188, 0.5299906134605408, 0.3375196158885956],
    [0.8429063558578491, 0.5330541133880615, 0.33947059512138367],
    [0.8477506637573242, 0.536117672920227, 0.34142157435417175],
    [0.8525949716567993, 0.5391811728477478, 0.34337255358695984],
    [0.8574392199516296, 0.5422447323799133, 0.3453235328197479],
    [0.8622835278511047, 0.5453082323074341, 0.347274512052536],
    [0.8671278357505798, 0.5483717918395996, 0.3492254912853241],
    [0.8719720840454102, 0.5514352917671204, 0.3511764705181122],
    [0.8768163919448853, 0.5544988512992859, 0.35312744975090027],
    [0.8816606998443604, 0.5575623512268066, 0.35507842898368835],
    [0.8865050077438354, 0.5606259107589722, 0.35702940821647644],
    [0.8913492560386658, 0.5636894106864929, 0.3589803874492645],
    [0.8961935639381409, 0.5667529702186584, 0.3609313666820526],
    [0.901037871837616, 0.5698164701461792, 0.3628823459148407],
    [0.9058821201324463, 0.5728800296783447, 0.3648333251476288],
    [0.9107264280319214, 0.5759435296058655, 0.36678430438041687],
    [0.9155707359313965, 0.5790070295333862, 0.36873528361320496],
    [0.9204149842262268, 0.5820705890655518, 0.37068626284599304],
    [0.9252592921257019, 0.5851340889930725, 0.37263724207878113],
    [0.930103600025177, 0.588197648525238, 0.3745882213115692],
    [0.9349478483200073, 0.5912611484527588, 0.3765392303466797],
    [0.9397921562194824, 0.5943247079849243, 0.3784902095794678],
    [0.9446364641189575, 0.5973882079124451, 0.38044118881225586],
    [0.9494807720184326, 0.6004517674446106, 0.38239216804504395],
    [0.9543250203132629, 0.6035152673721313, 0.38434314727783203],
    [0.959169328212738, 0.6065788269042969, 0.3862941265106201],
    [0.9640136361122131, 0.6096423268318176, 0.3882451057434082],
    [0.9688578844070435, 0.6127058863639832, 0.3901960849761963],
    [0.9737021923065186, 0.6157693862915039, 0.3921470642089844],
    [0.9785465002059937, 0.6188329458236694, 0.39409804344177246],
    [0.983390748500824, 0.6218964457511902, 0.39604902267456055],
    [0.9882350564002991, 0.6249600052833557, 0.39800000190734863],
    [0.9930793642997742, 0.6280235052108765, 0.3999509811401367],
    [0.9979236125946045, 0.631087064743042, 0.4019019603729248],
    [1.0, 0.6341505646705627, 0.4038529396057129],
    [1.0, 0.6372141242027283, 0.405803918838501],
    [1.0, 0.640277624130249, 0.40775489807128906],
    [1.0, 0.6433411836624146, 0.40970587730407715],
    [1.0, 0.6464046835899353, 0.41165685653686523],
    [1.0, 0.6494682431221008, 0.4136078357696533],
    [1.0, 0.6525317430496216, 0.4155588150024414],
    [1.0, 0.6555953025817871, 0.4175097942352295],
    [1.0, 0.6586588025093079, 0.4194607734680176],
    [1.0, 0.6617223620414734, 0.42141175270080566],
    [1.0, 0.6647858619689941, 0.42336273193359375],
    [1.0, 0.6678494215011597, 0.42531371116638184],
    [1.0, 0.6709129214286804, 0.4272647202014923],
    [1.0, 0.673976480960846, 0.4292156994342804],
    [1.0, 0.6770399808883667, 0.4311666786670685],
    [1.0, 0.6801035404205322, 0.43311765789985657],
    [1.0, 0.683167040348053, 0.43506863713264465],
    [1.0, 0.6862305998802185, 0.43701961636543274],
    [1.0, 0.6892940998077393, 0.4389705955982208],
    [1.0, 0.6923576593399048, 0.4409215748310089],
    [1.0, 0.6954211592674255, 0.442872554063797],
    [1.0, 0.6984847187995911, 0.4448235332965851],
    [1.0, 0.7015482187271118, 0.44677451252937317],
    [1.0, 0.7046117782592773, 0.44872549176216125],
    [1.0, 0.7076752781867981, 0.45067647099494934],
    [1.0, 0.7107388377189636, 0.4526274502277374],
    [1.0, 0.7138023376464844, 0.4545784294605255],
    [1.0, 0.7168658971786499, 0.4565294086933136],
    [1.0, 0.7199293971061707, 0.4584803879261017],
    [1.0, 0.7229929566383362, 0.46043136715888977],
    [1.0, 0.7260564565658569, 0.46238234639167786],
    [1.0, 0.7291200160980225, 0.46433332562446594],
    [1.0, 0.7321835160255432, 0.46628430485725403],
    [1.0, 0.7352470755577087, 0.4682352840900421],
    [1.0, 0.7383105754852295, 0.4701862633228302],
    [1.0, 0.741374135017395, 0.4721372425556183],
    [1.0, 0.7444376349449158, 0.47408822178840637],
    [1.0, 0.7475011944770813, 0.47603920102119446],
    [1.0, 0.750564694404602, 0.47799021005630493],
    [1.0, 0.7536282539367676, 0.479941189289093],
    [1.0, 0.7566917538642883, 0.4818921685218811],
    [1.0, 0.7597553133964539, 0.4838431477546692],
    [1.0, 0.7628188133239746, 0.4857941269874573],
    [1.0, 0.7658823728561401, 0.48774510622024536],
    [1.0, 0.7689458727836609, 0.48969608545303345],
    [1.0, 0.7720094323158264, 0.49164706468582153],
    [1.0, 0.7750729322433472, 0.4935980439186096],
    [1.0, 0.7781364917755127, 0.4955490231513977],
    [1.0, 0.7811999917030334, 0.4975000023841858],
];
